"""Independent oracles the test suite checks library code against.

Everything here deliberately reimplements a result by a different route than
the library: determinants via Fraction-Gauss instead of Bareiss, resultants
via the Sylvester matrix instead of the subresultant remainder sequence, real
root counts via Descartes bisection instead of Sturm chains, residue symbols
via explicit square tables instead of Euler's criterion. Slow is fine;
different is the point.
"""

from fractions import Fraction

# ---------------------------------------------------------------------------
# exact linear algebra over Q


def frac_det(rows):
    """Determinant by plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def frac_solve(rows, rhs):
    """Solve rows^T-free linear system A x = rhs over Q; None if singular/no solution."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, n) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(n):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if m[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for row_i, c in enumerate(pivots):
        x[c] = m[row_i][cols]
    return x


def lattice_member(rows, den, vec_num, vec_den):
    """Is vec (numerators over vec_den) in the lattice spanned by rows/den?"""
    target = [Fraction(v, vec_den) for v in vec_num]
    basis = [[Fraction(x, den) for x in row] for row in rows]
    # solve c * basis = target  <=>  basis^T c = target
    bt = [[basis[j][i] for j in range(len(basis))] for i in range(len(basis[0]))]
    coeffs = frac_solve(bt, target)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def lattice_equal(rows_a, den_a, rows_b, den_b):
    """Mutual membership of two full-rank integer lattices given as rows/den."""
    return all(
        lattice_member(rows_b, den_b, row, den_a) for row in rows_a
    ) and all(lattice_member(rows_a, den_a, row, den_b) for row in rows_b)


# ---------------------------------------------------------------------------
# resultants via the Sylvester matrix


def sylvester_matrix(f_coeffs, g_coeffs):
    """Sylvester matrix of two polynomials given low-to-high."""
    f = list(f_coeffs)
    g = list(g_coeffs)
    m = len(f) - 1
    n = len(g) - 1
    size = m + n
    rows = []
    fh = f[::-1]  # high-to-low
    gh = g[::-1]
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - i - len(fh)))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - i - len(gh)))
    return rows


def sylvester_resultant(f_coeffs, g_coeffs):
    if len(f_coeffs) == 1 or len(g_coeffs) == 1:
        # constant cases: res(c, g) = c^deg(g)
        if len(f_coeffs) == 1:
            return f_coeffs[0] ** (len(g_coeffs) - 1)
        return g_coeffs[0] ** (len(f_coeffs) - 1)
    det = frac_det(sylvester_matrix(f_coeffs, g_coeffs))
    assert det.denominator == 1
    return det.numerator


def sylvester_disc(coeffs):
    """Discriminant from the Sylvester resultant of f and f'."""
    n = len(coeffs) - 1
    deriv = [k * coeffs[k] for k in range(1, n + 1)]
    res = sylvester_resultant(coeffs, deriv)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val, rem = divmod(sign * res, coeffs[-1])
    assert rem == 0
    return val


# ---------------------------------------------------------------------------
# real root counting by Descartes bisection (squarefree input)


def _sign_variations(coeffs):
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _eval_frac(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _mobius_coeffs(coeffs, a, b):
    """Coefficients of (1+t)^n f((a+bt)/(1+t)) for the open interval (a, b)."""
    n = len(coeffs) - 1
    lin_num = [Fraction(a), Fraction(b)]  # a + b t
    lin_den = [Fraction(1), Fraction(1)]  # 1 + t
    out = [Fraction(0)] * (n + 1)
    num_pow = [Fraction(1)]
    pows_num = []
    for _ in range(n + 1):
        pows_num.append(num_pow)
        num_pow = _poly_mul(num_pow, lin_num)
    den_pow = [Fraction(1)]
    pows_den = []
    for _ in range(n + 1):
        pows_den.append(den_pow)
        den_pow = _poly_mul(den_pow, lin_den)
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        term = _poly_mul(pows_num[k], pows_den[n - k])
        for i, v in enumerate(term):
            out[i] += c * v
    return out


def _count_open(coeffs, a, b):
    g = _mobius_coeffs(coeffs, a, b)
    v = _sign_variations(g)
    if v <= 1:
        return v
    mid = (a + b) / 2
    bonus = 1 if _eval_frac(coeffs, mid) == 0 else 0
    return _count_open(coeffs, a, mid) + bonus + _count_open(coeffs, mid, b)


def count_real_roots(coeffs):
    """Number of distinct real roots of a squarefree integer polynomial."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    assert len(cs) >= 2, "need positive degree"
    lead = abs(cs[-1])
    bound = Fraction(1) + max(abs(c) for c in cs) / Fraction(lead)
    a, b = -bound, bound
    assert _eval_frac(cs, a) != 0 and _eval_frac(cs, b) != 0
    inner = 1 if _eval_frac(cs, Fraction(0)) == 0 else 0
    if inner:
        return _count_open(cs, a, Fraction(0)) + 1 + _count_open(cs, Fraction(0), b)
    return _count_open(cs, a, b)


# ---------------------------------------------------------------------------
# elementary number theory by brute force


def trial_division(n):
    """Factor a positive integer by trial division: sorted (p, e) list."""
    assert n >= 1
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def brute_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def square_classes(p):
    """The set of nonzero squares mod an odd prime p."""
    return {(x * x) % p for x in range(1, p)}


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in square_classes(p) else -1


def brute_nonresidue(p):
    squares = square_classes(p)
    return next(u for u in range(2, p) if u not in squares)


# ---------------------------------------------------------------------------
# closed-form quadratic field facts


def quadratic_field_disc(d):
    """Field discriminant of Q(sqrt(d)) for squarefree d != 0, 1."""
    return d if d % 4 == 1 else 4 * d


def quadratic_splitting(disc, p):
    """Splitting shape of p in the quadratic field of discriminant disc."""
    if p == 2:
        if disc % 2 == 0:
            return ((2, 1),)
        return ((1, 1), (1, 1)) if disc % 8 == 1 else ((1, 2),)
    if disc % p == 0:
        return ((2, 1),)
    return ((1, 1), (1, 1)) if brute_legendre(disc, p) == 1 else ((1, 2),)


def is_squarefree_int(n):
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# power sums from explicit roots


def power_sum_of_roots(roots, k):
    return sum(r**k for r in roots)


# ---------------------------------------------------------------------------
# certified-irreducible building blocks for factorization tests


def is_eisenstein_at(coeffs, p):
    """Eisenstein criterion: certifies irreducibility independently."""
    lead = coeffs[-1]
    if lead % p == 0:
        return False
    if any(c % p for c in coeffs[:-1]):
        return False
    return coeffs[0] % (p * p) != 0


def quadratic_is_irreducible(b, c):
    """x^2 + b x + c irreducible over Q iff b^2 - 4c is not a perfect square."""
    d = b * b - 4 * c
    if d < 0:
        return True
    r = int(d**0.5)
    while r * r > d:
        r -= 1
    while (r + 1) * (r + 1) <= d:
        r += 1
    return r * r != d
