"""Exact arithmetic in Z[sqrt(2)].

Elements are x + y*sqrt(2) with integer x, y.  The norm x**2 - 2*y**2 makes
the ring Euclidean, so gcds exist and every rational prime p = +/-1 mod 8
splits into a conjugate pair of prime elements of norm +/-p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._primes import is_prime


@dataclass(frozen=True)
class QuadInt:
    x: int
    y: int

    @classmethod
    def from_int(cls, n: int) -> QuadInt:
        return cls(n, 0)

    def __repr__(self) -> str:
        return f"QuadInt({self.x}, {self.y})"

    def __str__(self) -> str:
        return f"{self.x}{self.y:+}√2"

    def __add__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            other = QuadInt(other, 0)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return QuadInt(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        return self + (-(other if isinstance(other, QuadInt) else QuadInt(other, 0)))

    def __rsub__(self, other: QuadInt | int) -> QuadInt:
        return (-self) + other

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.x, -self.y)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.x * other, self.y * other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return QuadInt(
            self.x * other.x + 2 * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadInt(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> QuadInt:
        """Inverse of a unit (norm +/-1); anything else has none in the ring."""
        n = self.norm
        if n == 1:
            return self.conjugate()
        if n == -1:
            return -self.conjugate()
        raise ZeroDivisionError(f"{self} is not a unit")

    def conjugate(self) -> QuadInt:
        return QuadInt(self.x, -self.y)

    @property
    def norm(self) -> int:
        return self.x * self.x - 2 * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __divmod__(self, other: QuadInt) -> tuple[QuadInt, QuadInt]:
        return euclid_div(self, other)

    def __floordiv__(self, other: QuadInt) -> QuadInt:
        return euclid_div(self, other)[0]

    def __mod__(self, other: QuadInt) -> QuadInt:
        return euclid_div(self, other)[1]


ZERO = QuadInt(0, 0)
ONE = QuadInt(1, 0)
SQRT2 = QuadInt(0, 1)
GAMMA = QuadInt(1, 1)  # fundamental unit, norm -1
DELTA = QuadInt(3, 2)  # GAMMA**2, norm +1
_DELTA_INV = QuadInt(3, -2)


def _round_half_toward_zero(num: int, den: int) -> int:
    """Nearest integer to num/den; exact halves round toward zero."""
    if den < 0:
        num, den = -num, -den
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q < 0):
        q += 1
    return q


def euclid_div(alpha: QuadInt, beta: QuadInt) -> tuple[QuadInt, QuadInt]:
    """Quotient and remainder with |norm(remainder)| < |norm(beta)|.

    The quotient is alpha * conj(beta) / norm(beta) with both components
    rounded to a nearest integer; any rounding within 1/2 meets the bound,
    and the half-toward-zero rule makes the choice deterministic.
    """
    if beta.is_zero():
        raise ZeroDivisionError("division by zero in Z[sqrt(2)]")
    n = beta.norm
    p = alpha * beta.conjugate()
    q = QuadInt(_round_half_toward_zero(p.x, n), _round_half_toward_zero(p.y, n))
    return q, alpha - beta * q


def _canonical_key(v: QuadInt) -> tuple[int, bool, int, bool]:
    return (abs(v.x), v.x <= 0, abs(v.y), v.y < 0)


def _orbit_min_candidates(u: QuadInt) -> list[QuadInt]:
    # |x| along u * DELTA**k is unimodal (DELTA has norm 1, so the norm sign
    # is fixed along the orbit); greedy descent reaches the minimum.
    v = u
    while True:
        step = v * DELTA
        if abs(step.x) < abs(v.x):
            v = step
            continue
        step = v * _DELTA_INV
        if abs(step.x) < abs(v.x):
            v = step
            continue
        break
    return [w for w in (v, v * DELTA, v * _DELTA_INV) if abs(w.x) == abs(v.x)]


def canonical_associate(u: QuadInt) -> QuadInt:
    """The associate of u with minimal |x|, preferring x > 0, then minimal
    |y| with y >= 0.

    The unit group is {+/- GAMMA**k}; the two GAMMA-parity classes are
    scanned separately since each is a single DELTA orbit.
    """
    if u.is_zero():
        return u
    candidates: list[QuadInt] = []
    for start in (u, u * GAMMA):
        for v in _orbit_min_candidates(start):
            candidates.append(v)
            candidates.append(-v)
    return min(candidates, key=_canonical_key)


def is_associate(u: QuadInt, v: QuadInt) -> bool:
    """True iff u and v differ by a unit factor."""
    if u.is_zero() or v.is_zero():
        return u.is_zero() and v.is_zero()
    return (u % v).is_zero() and (v % u).is_zero()


def gcd(alpha: QuadInt, beta: QuadInt) -> QuadInt:
    """A greatest common divisor, in canonical associate form."""
    if alpha.is_zero() and beta.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = alpha, beta
    while not b.is_zero():
        a, b = b, a % b
    return canonical_associate(a)


def splits(p: int) -> bool:
    """Whether the rational prime p splits in Z[sqrt(2)]: p = +/-1 mod 8."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    return p % 8 in (1, 7)


def ideal_generator(p: int) -> QuadInt:
    """A prime element u with |norm(u)| = p, for a split prime p.

    Scans y = 1, 2, ... for a perfect square p + 2*y*y or 2*y*y - p; the
    minimal representation is known to appear within y <= 2*ceil(sqrt(p)).
    """
    if not splits(p):
        raise ValueError(f"{p} does not split in Z[sqrt(2)]")
    bound = 2 * (math.isqrt(p - 1) + 1)
    for y in range(1, bound + 1):
        for t in (p + 2 * y * y, 2 * y * y - p):
            if t <= 0:
                continue
            x = math.isqrt(t)
            if x * x == t:
                return QuadInt(x, y)
    raise AssertionError(f"no element of norm +/-{p} found within y <= {bound}")
