"""Pythagorean triples, the two-parameter form, and the brute-force enumerator.

A primitive Pythagorean triple (PPT) is (a, b, c) with a**2 + b**2 = c**2 and
no common divisor.  Every PPT arises as (r*r - s*s, 2*r*s, r*r + s*s) from a
coprime, opposite-parity pair 0 < s < r, and `enumerate_ppts` built on that
fact serves as the verification oracle for the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Triple:
    """An immutable Pythagorean triple; validates its identity eagerly."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.b <= 0 or self.c <= 0:
            raise ValueError(f"triple entries must be positive: {self.as_tuple()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"not a Pythagorean triple: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class ParamPair:
    """A parameter pair 0 < s < r for the classical triple form."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if not 0 < self.s < self.r:
            raise ValueError(f"need 0 < s < r, got r={self.r}, s={self.s}")

    def as_tuple(self) -> tuple[int, int]:
        return (self.r, self.s)


@dataclass(frozen=True)
class TripleClass:
    """Derived facts about a triple: primitivity, even leg, and its two gaps."""

    primitive: bool
    even_leg: str  # "a", "b", "both" or "none"
    g: int  # hypotenuse minus the larger leg
    f: int  # absolute difference of the legs


def from_params(p: ParamPair) -> Triple:
    """The triple (r*r - s*s, 2*r*s, r*r + s*s)."""
    r, s = p.r, p.s
    return Triple(r * r - s * s, 2 * r * s, r * r + s * s)


def is_primitive(t: Triple) -> bool:
    """True iff gcd(a, b) = 1; a divisor of two entries divides the third."""
    return math.gcd(t.a, t.b) == 1


def primitive_from_params(p: ParamPair) -> bool:
    """True iff the pair generates a primitive triple.

    Requires gcd(r, s) = 1 and opposite parity; a coprime pair of two odds
    yields a triple with all entries even.
    """
    return math.gcd(p.r, p.s) == 1 and (p.r - p.s) % 2 == 1


def to_params(t: Triple) -> ParamPair:
    """The unique parameter pair of a primitive triple.

    With o the odd leg, r*r = (c + o) / 2 and s*s = (c - o) / 2.  Rejects
    non-primitive input (composite triples have no primitive preimage).
    """
    if not is_primitive(t):
        raise ValueError(f"{t} is not primitive; no parameter preimage")
    odd = t.a if t.a % 2 else t.b
    r2, s2 = (t.c + odd) // 2, (t.c - odd) // 2
    r, s = math.isqrt(r2), math.isqrt(s2)
    if r * r != r2 or s * s != s2:
        raise ValueError(f"{t} has no parameter preimage")
    return ParamPair(r, s)


def classify_triple(t: Triple) -> TripleClass:
    if t.a % 2 == 0 and t.b % 2 == 0:
        even_leg = "both"
    elif t.a % 2 == 0:
        even_leg = "a"
    elif t.b % 2 == 0:
        even_leg = "b"
    else:
        even_leg = "none"
    return TripleClass(
        primitive=is_primitive(t),
        even_leg=even_leg,
        g=t.c - max(t.a, t.b),
        f=abs(t.b - t.a),
    )


def normalize(t: Triple) -> Triple:
    """Reorder the legs as (odd leg, even leg, hypotenuse)."""
    if (t.a + t.b) % 2 == 0:
        raise ValueError(f"{t} has legs of equal parity; no odd/even normal form")
    return t if t.a % 2 else Triple(t.b, t.a, t.c)


def enumerate_ppts(c_max: int) -> list[Triple]:
    """Every PPT with hypotenuse <= c_max, odd leg first, sorted by (c, a).

    Exhaustive over coprime opposite-parity parameter pairs; each triple
    appears exactly once.  Empty below the smallest hypotenuse 5.
    """
    found: list[Triple] = []
    r = 2
    while r * r + 1 <= c_max:
        start = 2 if r % 2 else 1
        for s in range(start, r, 2):
            c = r * r + s * s
            if c > c_max:
                break
            if math.gcd(r, s) == 1:
                found.append(Triple(r * r - s * s, 2 * r * s, c))
        r += 1
    found.sort(key=lambda t: (t.c, t.a))
    return found
