"""Polynomial arithmetic and factorization over prime fields.

Polynomials over F_p are plain tuples of ints in [0, p), lowest degree
first, () meaning zero. Factorization is squarefree decomposition, then
distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
The only randomness is a random.Random seeded by sha256 of (p, coeffs), so
identical calls take identical paths on every platform.
"""

import hashlib
import random

from .arith import is_prime
from .errors import DegenerateInputError, InternalConsistencyError, InvalidPrimeError
from .polys import IntPoly


def norm(coeffs, p):
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def from_intpoly(f, p):
    return norm(f.coeffs, p)


def to_intpoly(a):
    return IntPoly(list(a))


def deg(a):
    return len(a) - 1


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return norm(out, p)


def sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return norm(out, p)


def scal(a, k, p):
    k %= p
    return norm([c * k for c in a], p)


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return norm(out, p)


def divmod_p(a, b, p):
    if not b:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    a = list(a)
    db = deg(b)
    inv = pow(b[-1], -1, p)
    if deg(a) < db:
        return (), norm(a, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = (a[i] * inv) % p
        if c:
            q[i - db] = c
            for j, bc in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * bc) % p
    return norm(q, p), norm(a[:db], p)


def mod_p(a, b, p):
    return divmod_p(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    if a[-1] == 1:
        return a
    return scal(a, pow(a[-1], -1, p), p)


def gcd_p(a, b, p):
    while b:
        a, b = b, mod_p(a, b, p)
    return monic(a, p)


def pow_mod(base, e, modulus, p):
    result = (1,)
    base = mod_p(base, modulus, p)
    while e > 0:
        if e & 1:
            result = mod_p(mul(result, base, p), modulus, p)
        base = mod_p(mul(base, base, p), modulus, p)
        e >>= 1
    return result


def derivative(a, p):
    return norm([(i * c) % p for i, c in enumerate(a)][1:], p)


def _pth_root(a, p):
    """For a = h(x^p) over F_p, return h (Frobenius is identity on F_p)."""
    return norm([a[i] for i in range(0, len(a), p)], p)


def squarefree_decomposition(f, p):
    """List of (monic squarefree factor, multiplicity) with product f (monic)."""
    out = {}

    def merge(g, m):
        if deg(g) >= 1:
            out[g] = out.get(g, 0) + m

    def rec(f, mult):
        if deg(f) < 1:
            return
        d = derivative(f, p)
        if not d:
            for g, m in squarefree_decomposition(_pth_root(f, p), p):
                merge(g, m * p * mult)
            return
        c = gcd_p(f, d, p)
        w = divmod_p(f, c, p)[0]
        i = 1
        while deg(w) > 0:
            y = gcd_p(w, c, p)
            z = divmod_p(w, y, p)[0]
            merge(z, i * mult)
            w = y
            c = divmod_p(c, y, p)[0]
            i += 1
        if deg(c) > 0:
            for g, m in squarefree_decomposition(_pth_root(c, p), p):
                merge(g, m * p * mult)

    rec(monic(f, p), 1)
    return sorted(out.items(), key=lambda t: (deg(t[0]), t[0]))


def distinct_degree(f, p):
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    out = []
    h = (0, 1)  # x
    x = (0, 1)
    d = 0
    while deg(f) > 2 * (d + 1) - 1 and deg(f) > 0:
        d += 1
        h = pow_mod(h, p, f, p)
        g = gcd_p(sub(h, x, p), f, p)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = mod_p(h, f, p)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _random_poly(rng, max_deg, p):
    while True:
        cs = [rng.randrange(p) for _ in range(max_deg + 1)]
        t = norm(cs, p)
        if deg(t) >= 1:
            return t


def equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of a squarefree monic f whose irreducible
    factors all have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = _random_poly(rng, n - 1, p)
        g = gcd_p(a, f, p)
        if 0 < deg(g) < n:
            pieces = g, divmod_p(f, g, p)[0]
        else:
            if p == 2:
                t = a
                acc = a
                for _ in range(d - 1):
                    t = mod_p(mul(t, t, p), f, p)
                    acc = add(acc, t, p)
                b = acc
            else:
                b = sub(pow_mod(a, (p ** d - 1) // 2, f, p), (1,), p)
            g = gcd_p(b, f, p)
            if not 0 < deg(g) < n:
                continue
            pieces = g, divmod_p(f, g, p)[0]
        out = []
        for piece in pieces:
            out.extend(equal_degree(monic(piece, p), d, p, rng))
        return out


def _seed_for(parts):
    h = hashlib.sha256(repr(parts).encode()).digest()
    return int.from_bytes(h[:8], "big")


def factor_mod_p(f, p):
    """Factor f over F_p: sorted [(IntPoly factor with coeffs in [0,p), mult)].

    The product of factor^mult equals f normalized monic (f times lc^-1).
    Raises InvalidPrimeError for composite p, DegenerateInputError when f
    vanishes mod p.
    """
    if not is_prime(p):
        raise InvalidPrimeError("factor_mod_p needs a prime modulus, got %r" % (p,))
    a = from_intpoly(f, p)
    if not a:
        raise DegenerateInputError("polynomial vanishes mod %d" % p)
    if deg(a) == 0:
        return []
    a = monic(a, p)
    rng = random.Random(_seed_for(("factor_mod_p", p, a)))
    out = {}
    for sqf, mult in squarefree_decomposition(a, p):
        for prod, d in distinct_degree(sqf, p):
            for irr in equal_degree(prod, d, p, rng):
                key = to_intpoly(irr)
                out[key] = out.get(key, 0) + mult
    result = sorted(out.items(), key=lambda t: (t[0].degree, t[0].coeffs))
    check = (1,)
    for g, m in result:
        for _ in range(m):
            check = mul(check, from_intpoly(g, p), p)
    if check != a:  # pragma: no cover
        raise InternalConsistencyError("mod-p factorization failed to re-multiply")
    return result


def is_irreducible_mod_p(f, p):
    facs = factor_mod_p(f, p)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == deg(from_intpoly(f, p))
