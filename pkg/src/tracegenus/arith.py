"""Integer arithmetic: primality, factorization, quadratic residues.

Fully deterministic. Miller-Rabin uses the fixed witness set that is proven
sufficient below 3.3 * 10^24; Pollard rho runs Brent's variant over an
escalating, fixed parameter schedule. Composite cofactors above 10^18 that
survive the schedule raise FactorizationLimitError rather than looping.
"""

from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import DegenerateInputError, FactorizationLimitError, InvalidPrimeError

_TRIAL_LIMIT = 100_000
_COFACTOR_LIMIT = 10 ** 18
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(limit + 1) if sieve[i]]

_PRIMES_BELOW_1000 = _small_primes(1000)


def is_prime(n):
    """Deterministic Miller-Rabin (exact for n < 3.3e24, our working range)."""
    if n < 2:
        return False
    for p in _PRIMES_BELOW_1000:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_RHO_CONSTANTS = 64  # polynomial offsets x^2 + c tried in order
_RHO_STEP_CAP = 1 << 21  # squarings allowed per offset before giving up


def _brent_rho(n):
    """One Brent-rho sweep over the fixed schedule; returns a proper factor or None."""
    if n % 2 == 0:
        return 2
    for c in range(1, _RHO_CONSTANTS + 1):
        y, m = 2, 128
        g, r, q = 1, 1, 1
        x = ys = y
        cap = _RHO_STEP_CAP
        steps = 0
        while g == 1 and steps < cap:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
            steps += r
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


@dataclass(frozen=True)
class PrimeFactorization:
    """sign * product(p^e); factors is a tuple of (prime, exponent), p ascending."""

    sign: int
    factors: tuple = field(default_factory=tuple)

    def value(self):
        out = self.sign
        for p, e in self.factors:
            out *= p ** e
        return out

    def valuation(self, p):
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self):
        return [p for p, _ in self.factors]

    def as_dict(self):
        return dict(self.factors)


def factor_integer(n):
    """Full factorization of a nonzero integer as a PrimeFactorization."""
    if n == 0:
        raise DegenerateInputError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    out = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 2,3,5-wheel trial division up to the fixed limit
    inc = (4, 2, 4, 2, 4, 6, 2, 6)
    p, i = 7, 0
    while p * p <= n and p <= _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += inc[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _brent_rho(m)
        if d is None:
            if m > _COFACTOR_LIMIT:
                raise FactorizationLimitError(
                    "composite cofactor %d exceeds the deterministic schedule" % m
                )
            raise FactorizationLimitError(  # pragma: no cover
                "rho schedule exhausted on %d" % m
            )
        stack.extend([d, m // d])
    return PrimeFactorization(sign, tuple(sorted(out.items())))


def legendre(a, p):
    """Legendre symbol (a/p) in {-1, 0, 1}; p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise InvalidPrimeError("Legendre symbol needs an odd prime, got %r" % (p,))
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def smallest_nonresidue(p):
    """Least u >= 2 with (u/p) = -1; p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise InvalidPrimeError("nonresidue search needs an odd prime, got %r" % (p,))
    u = 2
    while legendre(u, p) != -1:
        u += 1
    return u
