"""Families of primitive triples (a, b, b+g) with a fixed hypotenuse gap g.

A gap g = c - b occurs in a primitive triple only when g is an odd square
m*m or twice a square 2*m*m.  Each admissible gap carries one infinite
family, indexed by n >= 1 and built from a parameter-pair table keyed on the
parity of the root m:

    odd square m*m      r = (2n+1+m)/2, s = (2n+1-m)/2   gcd(2n+1, m) = 1
    2*m*m, m odd        r = n,          s = m            gcd(n, m) = 1, n even
    2*m*m, m even       r = 2n+1,       s = m            gcd(2n+1, m) = 1

Indices whose side conditions fail are skipped, so item positions are stable.
The first legs of a family follow the progression a = stride*n + offset.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .triples import ParamPair, Triple, from_params, is_primitive

__all__ = [
    "GKind",
    "GClass",
    "GFamilyItem",
    "classify_g",
    "leg_from_gap",
    "family_params",
    "family_triple",
    "generate_g_family",
    "invert_to_family",
]


class GKind(enum.Enum):
    ODD_SQUARE = "odd-square"
    TWICE_SQUARE_ODD = "twice-square-odd-root"
    TWICE_SQUARE_EVEN = "twice-square-even-root"
    INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class GClass:
    """Admissibility class of a gap; inadmissible values record the failed tests."""

    g: int
    kind: GKind
    m: int | None = None
    reasons: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return self.kind is not GKind.INADMISSIBLE


@dataclass(frozen=True)
class GFamilyItem:
    n: int
    k: int  # the odd multiplier 2n+1, or n itself for the odd-root even gap
    r: int
    s: int
    triple: Triple
    stride: int
    offset: int


def classify_g(g: int) -> GClass:
    """The unique admissibility class of g; the three kinds are disjoint."""
    if g < 1:
        raise ValueError(f"gap must be a positive integer, got {g}")
    if g % 2:
        m = math.isqrt(g)
        if m * m == g:
            return GClass(g, GKind.ODD_SQUARE, m)
    else:
        half = g // 2
        m = math.isqrt(half)
        if m * m == half:
            kind = GKind.TWICE_SQUARE_ODD if m % 2 else GKind.TWICE_SQUARE_EVEN
            return GClass(g, kind, m)
    return GClass(
        g,
        GKind.INADMISSIBLE,
        None,
        reasons=("not an odd square", "not twice a square"),
    )


def leg_from_gap(a: int, g: int) -> int | None:
    """The leg b with (a, b, b+g) Pythagorean, when it is a positive integer.

    Solving a*a + b*b = (b+g)**2 gives b = (a*a - g*g) / (2*g).
    """
    if g < 1:
        raise ValueError(f"gap must be a positive integer, got {g}")
    num = a * a - g * g
    if num <= 0 or num % (2 * g):
        return None
    return num // (2 * g)


_PROGRESSION = {
    GKind.ODD_SQUARE: lambda m: (2 * m, m),
    GKind.TWICE_SQUARE_ODD: lambda m: (2 * m, 0),
    GKind.TWICE_SQUARE_EVEN: lambda m: (4 * m, 2 * m),
}


def family_params(gc: GClass, n: int) -> ParamPair | None:
    """The parameter pair of the n-th family member, or None when the
    table's gcd or parity side condition fails at this index."""
    if not gc.admissible:
        raise ValueError(f"gap {gc.g} admits no primitive triples")
    if n < 1:
        raise ValueError(f"family index starts at 1, got {n}")
    m = gc.m
    assert m is not None
    if gc.kind is GKind.ODD_SQUARE:
        k = 2 * n + 1
        if k <= m or math.gcd(k, m) != 1:
            return None
        return ParamPair((k + m) // 2, (k - m) // 2)
    if gc.kind is GKind.TWICE_SQUARE_ODD:
        # n and the odd root must have opposite parity or the triple
        # degenerates to an all-even one.
        if n <= m or n % 2 or math.gcd(n, m) != 1:
            return None
        return ParamPair(n, m)
    k = 2 * n + 1
    if k <= m or math.gcd(k, m) != 1:
        return None
    return ParamPair(k, m)


def family_triple(gc: GClass, n: int) -> Triple | None:
    """The n-th family triple in that family's leg order, if n is valid.

    Odd gaps put the odd leg first; even gaps put the even leg first, so the
    second leg is always the one at distance g from the hypotenuse.
    """
    pair = family_params(gc, n)
    if pair is None:
        return None
    t = from_params(pair)
    if gc.kind is GKind.ODD_SQUARE:
        return t
    return Triple(t.b, t.a, t.c)


def generate_g_family(g: int, count: int) -> list[GFamilyItem]:
    """The first `count` members of the family for an admissible gap g."""
    gc = classify_g(g)
    if not gc.admissible:
        raise ValueError(
            f"gap {g} admits no primitive triples: " + "; ".join(gc.reasons)
        )
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    assert gc.m is not None
    stride, offset = _PROGRESSION[gc.kind](gc.m)
    items: list[GFamilyItem] = []
    n = 0
    while len(items) < count:
        n += 1
        pair = family_params(gc, n)
        if pair is None:
            continue
        triple = family_triple(gc, n)
        assert triple is not None
        k = n if gc.kind is GKind.TWICE_SQUARE_ODD else 2 * n + 1
        items.append(
            GFamilyItem(
                n=n,
                k=k,
                r=pair.r,
                s=pair.s,
                triple=triple,
                stride=stride,
                offset=offset,
            )
        )
    return items


def invert_to_family(t: Triple) -> tuple[GClass, int]:
    """Family coordinates (class, n) of a primitive triple read as (a, b, b+g).

    The gap c - b of a primitive triple is always admissible: it is an odd
    square when b is the even leg and twice a square otherwise.  The index
    comes from the first leg, a = m*(2n+1), 2*m*n or 2*m*(2n+1) by class.
    """
    if not is_primitive(t):
        raise ValueError(f"{t} is not primitive")
    gc = classify_g(t.c - t.b)
    assert gc.admissible and gc.m is not None, "primitive triples have admissible gaps"
    m = gc.m
    if gc.kind is GKind.ODD_SQUARE:
        k, rem = divmod(t.a, m)
        n = (k - 1) // 2
    elif gc.kind is GKind.TWICE_SQUARE_ODD:
        n, rem = divmod(t.a, 2 * m)
    else:
        k, rem = divmod(t.a, 2 * m)
        n = (k - 1) // 2
    if rem or family_triple(gc, n) != t:
        raise ValueError(f"{t} does not invert to a gap family")
    return gc, n
