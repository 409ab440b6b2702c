"""Families of primitive triples (a, a+f, c) with a fixed leg gap f.

A primitive triple with legs f apart satisfies (2a+f)**2 - 2c**2 = -f**2, a
Pell-type equation, which forces every prime factor of f to be +/-1 mod 8
(and f to be odd).  Conversely, all such triples are read off from the
elements +/- GAMMA * DELTA**m * u**2 of Z[sqrt(2)], where u ranges over the
norm-f products built by choosing, for each prime factor of f, either its
prime-element generator or the conjugate.

Generation over distinct m values is independent; deduplication of the
resulting triples is the only merge point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ._primes import factorize
from .pell import gamma_delta_power
from .triples import Triple
from .zsqrt2 import ONE, QuadInt, ideal_generator

__all__ = [
    "FSpec",
    "CfElement",
    "FTriple",
    "admissible_f",
    "pell_recast",
    "cf_elements",
    "generate_f_triples",
    "verify_f_triple",
]


@dataclass(frozen=True)
class FSpec:
    """A leg gap with its factorization and admissibility verdict."""

    f: int
    factorization: tuple[tuple[int, int], ...]
    admissible: bool
    reasons: tuple[str, ...] = ()


@dataclass(frozen=True)
class CfElement:
    """A norm +/-f element; choices[i] = 0 picks the generator of the i-th
    prime factor, 1 its conjugate."""

    u: QuadInt
    choices: tuple[int, ...]


@dataclass(frozen=True)
class FTriple:
    """A generated triple with its branch provenance and Pell components
    X = 2a + f, Y = c."""

    triple: Triple
    m: int
    sign: int
    cf_choice: CfElement
    X: int
    Y: int


def admissible_f(f: int) -> FSpec:
    """Factor f and test the necessary condition: odd, all primes +/-1 mod 8.

    Rejection reasons are listed per offending prime.  Factorization is
    limited to f < 2**64 (UnsupportedRangeError beyond).
    """
    if f < 1:
        raise ValueError(f"leg gap must be a positive integer, got {f}")
    factorization = tuple(factorize(f))
    reasons = tuple(
        f"prime factor {p} is {p % 8} mod 8, not +/-1"
        for p, _ in factorization
        if p % 8 not in (1, 7)
    )
    return FSpec(f, factorization, admissible=not reasons, reasons=reasons)


def pell_recast(t: Triple, f: int) -> tuple[int, int]:
    """(X, Y) = (2a + f, c) for a triple with legs a < b = a + f.

    The Pythagorean identity turns into X*X - 2*Y*Y = -f*f exactly.
    """
    if t.b - t.a != f:
        raise ValueError(f"legs of {t} differ by {t.b - t.a}, not {f}")
    return 2 * t.a + f, t.c


def cf_elements(spec: FSpec) -> list[CfElement]:
    """All 2**k products over the k distinct prime factors, each of norm
    +/-f; the empty product 1 for f = 1."""
    if not spec.admissible:
        raise ValueError(
            f"leg gap {spec.f} admits no primitive triples: "
            + "; ".join(spec.reasons)
        )
    gens = [ideal_generator(p) for p, _ in spec.factorization]
    out: list[CfElement] = []
    for choices in itertools.product((0, 1), repeat=len(gens)):
        u = ONE
        for (p, exp), gen, pick in zip(spec.factorization, gens, choices):
            q = gen if pick == 0 else gen.conjugate()
            u = u * q**exp
        out.append(CfElement(u, choices))
    return out


def generate_f_triples(spec: FSpec, m_lo: int, m_hi: int) -> list[FTriple]:
    """All distinct triples from +/- GAMMA * DELTA**m * u**2 over m in
    [m_lo, m_hi], every norm-f element u, and both signs.

    Components are normalized to X = |x|, Y = |y|; branches with X <= f are
    degenerate (they would give a nonpositive first leg) and are skipped.
    Each triple is emitted once, tagged with the first branch that hit it.
    """
    if not spec.admissible:
        raise ValueError(
            f"leg gap {spec.f} admits no primitive triples: "
            + "; ".join(spec.reasons)
        )
    if m_lo > m_hi:
        raise ValueError(f"empty exponent range [{m_lo}, {m_hi}]")
    f = spec.f
    elements = cf_elements(spec)
    seen: set[tuple[int, int, int]] = set()
    out: list[FTriple] = []
    for m in range(m_lo, m_hi + 1):
        base = gamma_delta_power(m)
        for elem in elements:
            w = base * elem.u * elem.u
            for sign in (1, -1):
                x, y = sign * w.x, sign * w.y
                X, Y = abs(x), abs(y)
                if X <= f or (X - f) % 2:
                    continue
                a, b = (X - f) // 2, (X + f) // 2
                key = (a, b, Y)
                if key in seen:
                    continue
                seen.add(key)
                out.append(FTriple(Triple(a, b, Y), m, sign, elem, X, Y))
    return out


def verify_f_triple(ft: FTriple, spec: FSpec) -> bool:
    """Independent recheck: Pythagorean, leg gap f, primitive, and the Pell
    identity on (X, Y).  False is the diagnostic, never an exception."""
    t, f = ft.triple, spec.f
    return (
        t.a * t.a + t.b * t.b == t.c * t.c
        and t.b - t.a == f
        and math.gcd(t.a, t.b) == 1
        and ft.X == 2 * t.a + f
        and ft.Y == t.c
        and ft.X * ft.X - 2 * ft.Y * ft.Y == -f * f
    )
