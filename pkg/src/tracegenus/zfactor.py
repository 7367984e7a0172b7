"""Factorization in Z[x]: Yun squarefree split, quadratic Hensel lifting of a
mod-p factorization above the Mignotte bound, and Zassenhaus subset
recombination. Non-monic input is routed through the classical monicizing
substitution F(x) = lc^(deg-1) * f(x/lc).
"""

from itertools import combinations
from math import gcd, isqrt

from . import modp
from .errors import DegenerateInputError, InternalConsistencyError
from .polys import IntPoly, _frac_divmod, _from_frac_primitive, _to_frac, poly_gcd

_LIFT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67)


def yun_squarefree(f):
    """[(primitive squarefree factor, multiplicity)] for primitive f, char 0."""
    d = f.derivative()
    g = poly_gcd(f, d)
    if g.degree == 0:
        return [(f.primitive()[1], 1)]
    fg = _to_frac(g)
    c, _ = _frac_divmod(_to_frac(f), fg)
    w, _ = _frac_divmod(_to_frac(d), fg)
    z = [a - b for a, b in zip_pad(w, _frac_derivative(c))]
    out = []
    i = 1
    while len(c) - 1 > 0:
        ci = _from_frac_primitive(c)
        zi = _from_frac_primitive(z) if any(z) else IntPoly()
        fi = poly_gcd(ci, zi) if not zi.is_zero else ci
        if fi.degree >= 1:
            out.append((fi, i))
        c, _ = _frac_divmod(c, _to_frac(fi))
        z_new, _ = _frac_divmod(z, _to_frac(fi))
        z = [a - b for a, b in zip_pad(z_new, _frac_derivative(c))]
        i += 1
    return out


def _frac_derivative(v):
    return [k * c for k, c in enumerate(v)][1:]


def zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _l2_norm_ceil(f):
    s = sum(c * c for c in f.coeffs)
    r = isqrt(s)
    return r if r * r == s else r + 1


def _center(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _centered_poly(coeffs, m):
    return IntPoly([_center(c, m) for c in coeffs])


def _poly_mul_mod(a, b, m):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_divmod_monic_mod(a, b, m):
    """(q, r) with a = qb + r mod m; b must have lc = 1 exactly."""
    a = [c % m for c in a]
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j, bc in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * bc) % m
    while a and len(a) - 1 >= db:
        a.pop()
    return q, a


def _trim_to_degree(coeffs, d, m, what):
    cs = [c % m for c in coeffs]
    for i in range(d + 1, len(cs)):
        if cs[i] % m != 0:  # pragma: no cover
            raise InternalConsistencyError("Hensel %s overflowed its degree" % what)
    cs = cs[: d + 1]
    return cs


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: from f = gh (mod m) with sg + th = 1 (mod m)
    to the same data mod m^2. h stays monic; degrees are preserved."""
    m2 = m * m
    gh = _poly_mul_mod(g, h, m2)
    e = [(a - b) % m2 for a, b in zip_pad(f, gh)]
    se = _poly_mul_mod(s, e, m2)
    q, r = _poly_divmod_monic_mod(se, h, m2)
    te = _poly_mul_mod(t, e, m2)
    qg = _poly_mul_mod(q, g, m2)
    g1 = [(a + b + c) % m2 for a, b, c in zip3_pad(g, te, qg)]
    h1 = [(a + b) % m2 for a, b in zip_pad(h, r)]
    g1 = _trim_to_degree(g1, len(g) - 1, m2, "factor")
    h1 = _trim_to_degree(h1, len(h) - 1, m2, "cofactor")
    h1[-1] %= m2
    if h1[-1] != 1:  # pragma: no cover
        raise InternalConsistencyError("Hensel cofactor lost monicity")
    sg = _poly_mul_mod(s, g1, m2)
    th = _poly_mul_mod(t, h1, m2)
    b = [(a + c) % m2 for a, c in zip_pad(sg, th)]
    if b:
        b[0] = (b[0] - 1) % m2
    sb = _poly_mul_mod(s, b, m2)
    c_, d_ = _poly_divmod_monic_mod(sb, h1, m2)
    s1 = [(a - bb) % m2 for a, bb in zip_pad(s, d_)]
    tb = _poly_mul_mod(t, b, m2)
    cg = _poly_mul_mod(c_, g1, m2)
    t1 = [(a - bb - cc) % m2 for a, bb, cc in zip3_pad(t, tb, cg)]
    return g1, h1, s1, t1


def zip3_pad(a, b, c):
    n = max(len(a), len(b), len(c))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    c = list(c) + [0] * (n - len(c))
    return zip(a, b, c)


def _bezout_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    r0, r1 = modp.norm(g, p), modp.norm(h, p)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = modp.divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, modp.sub(s0, modp.mul(q, s1, p), p)
        t0, t1 = t1, modp.sub(t0, modp.mul(q, t1, p), p)
    if modp.deg(r0) != 0:  # pragma: no cover
        raise InternalConsistencyError("lift factors not coprime mod p")
    inv = pow(r0[0], -1, p)
    s = modp.scal(s0, inv, p)
    t = modp.scal(t0, inv, p)
    # normalize degrees: s mod h, then t = (1 - s g) / h exactly
    s = modp.mod_p(s, modp.norm(h, p), p)
    num = modp.sub((1,), modp.mul(s, modp.norm(g, p), p), p)
    t, rem = modp.divmod_p(num, modp.norm(h, p), p)
    if rem:  # pragma: no cover
        raise InternalConsistencyError("Bezout normalization failed")
    return s, t


def _lift_tree(f_coeffs, factors, p, target):
    """Lift monic factors (tuples mod p) of the monic integer poly f_coeffs
    to modulus m >= target; returns (list of lifted coefficient lists, m)."""
    if len(factors) == 1:
        m = p
        while m < target:
            m *= m
        return [[c % m for c in f_coeffs]], m
    half = len(factors) // 2
    g = (1,)
    for fac in factors[:half]:
        g = modp.mul(g, fac, p)
    h = (1,)
    for fac in factors[half:]:
        h = modp.mul(h, fac, p)
    s, t = _bezout_mod_p(g, h, p)
    gl, hl, sl, tl = list(g), list(h), list(s), list(t)
    m = p
    while m < target:
        gl, hl, sl, tl = _hensel_step([c % (m * m) for c in f_coeffs], gl, hl, sl, tl, m)
        m *= m
    # recurse with the halves as the polynomials to refine further
    gl[-1] = 1
    left, _ = _lift_tree(gl, factors[:half], p, target)
    right, _ = _lift_tree(hl, factors[half:], p, target)
    return left + right, m


def _factor_monic_squarefree(f):
    """Irreducible (monic) factors of a monic squarefree integer polynomial."""
    n = f.degree
    if n <= 1:
        return [f]
    disc_like = poly_gcd(f, f.derivative())
    if disc_like.degree != 0:  # pragma: no cover
        raise InternalConsistencyError("expected squarefree input")
    p = None
    for cand in _LIFT_PRIMES:
        a = modp.from_intpoly(f, cand)
        if modp.deg(a) != n:
            continue
        if modp.deg(modp.gcd_p(a, modp.derivative(a, cand), cand)) == 0:
            p = cand
            break
    if p is None:  # pragma: no cover
        # fall back to scanning odd primes upward; squarefree f has only
        # finitely many bad primes
        from .arith import is_prime

        cand = 71
        while p is None:
            if is_prime(cand):
                a = modp.from_intpoly(f, cand)
                if modp.deg(a) == n and modp.deg(
                    modp.gcd_p(a, modp.derivative(a, cand), cand)
                ) == 0:
                    p = cand
            cand += 2
    local = [fac for fac, _ in modp.factor_mod_p(f, p)]
    if len(local) == 1:
        return [f]
    bound = 2 * (2 ** n) * _l2_norm_ceil(f) + 1
    local_tuples = sorted(
        (modp.from_intpoly(fac, p) for fac in local), key=lambda t: (len(t), t)
    )
    lifted, m = _lift_tree(list(f.coeffs), local_tuples, p, bound)
    pieces = [tuple(c) for c in lifted]
    remaining = list(range(len(pieces)))
    result = []
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = None
        for subset in combinations(remaining, size):
            prod = [1]
            for i in subset:
                prod = _poly_mul_mod(prod, pieces[i], m)
            cand = _centered_poly(prod, m)
            if not cand.is_monic:
                continue
            q, r = current.divmod_monic(cand)
            if r.is_zero:
                found = (subset, cand, q)
                break
        if found is None:
            size += 1
            continue
        subset, cand, q = found
        result.append(cand)
        current = q
        remaining = [i for i in remaining if i not in subset]
    if current.degree > 0:
        result.append(current)
    return sorted(result, key=lambda g: (g.degree, g.coeffs))


def _factor_squarefree_primitive(f):
    """Irreducible primitive factors (positive lc) of a squarefree primitive f."""
    if f.degree == 1:
        return [f]
    l = f.lc
    if l == 1:
        return _factor_monic_squarefree(f)
    if l < 0:  # primitive parts here always have positive lc
        raise InternalConsistencyError("negative leading coefficient")
    # F(x) = l^(n-1) f(x/l) is monic with integer coefficients
    n = f.degree
    F = IntPoly([f.coeffs[i] * l ** (n - 1 - i) for i in range(n + 1)])
    out = []
    residual = f
    for G in _factor_monic_squarefree(F):
        g = IntPoly([G.coeffs[i] * l ** i for i in range(len(G.coeffs))]).primitive()[1]
        out.append(g)
        fr, rem = _frac_divmod(_to_frac(residual), _to_frac(g))
        if any(rem):  # pragma: no cover
            raise InternalConsistencyError("monicizing substitution lost a factor")
        residual = _from_frac_primitive(fr) if len(fr) > 1 else IntPoly([1])
    return sorted(out, key=lambda g: (g.degree, g.coeffs))


def factor_over_z(f):
    """Complete factorization over Z.

    Returns (constant, [(irreducible primitive factor, multiplicity), ...])
    with constant * product(factor^mult) == f exactly. Factors have positive
    leading coefficients and are sorted by (degree, coefficients).
    """
    if f.is_zero:
        raise DegenerateInputError("cannot factor the zero polynomial")
    if f.degree == 0:
        return f.coeffs[0], []
    const, prim = f.primitive()
    out = {}
    for part, mult in yun_squarefree(prim):
        for irr in _factor_squarefree_primitive(part):
            out[irr] = out.get(irr, 0) + mult
    factors = sorted(out.items(), key=lambda t: (t[0].degree, t[0].coeffs))
    check = IntPoly([const])
    for g, m in factors:
        for _ in range(m):
            check = check * g
    if check != f:  # pragma: no cover
        raise InternalConsistencyError("factorization failed to re-multiply")
    return const, factors


def is_irreducible(f):
    """True for polynomials irreducible over Q (degree >= 1)."""
    if f.degree < 1:
        return False
    const, factors = factor_over_z(f)
    return len(factors) == 1 and factors[0][1] == 1
