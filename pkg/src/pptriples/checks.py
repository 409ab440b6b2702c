"""Bulk oracle-equivalence suites backing the CLI `verify` command.

Each suite compares a closed-form or generator path against the exhaustive
triple enumerator (or a raw pair count) at a caller-chosen bound and reports
the number of checks, failures, and the first counterexample.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .density import (
    TotientSieve,
    build_sieve,
    count_GEE,
    count_GEO,
    count_GO,
    count_pool,
)
from .hyp_gap import family_triple, invert_to_family
from .leg_gap import admissible_f, generate_f_triples
from .pell import apply_delta_power, neg_pell_solution
from .triples import Triple, enumerate_ppts
from .zsqrt2 import DELTA, GAMMA, QuadInt

__all__ = [
    "CheckReport",
    "check_g_coverage",
    "check_f_coverage",
    "check_nonexistence",
    "check_pell",
    "check_density_cross",
]

HYP_GAP_SAMPLE = (3, 5, 6, 7, 10, 11, 12)
LEG_GAP_SAMPLE = (3, 5, 11, 13, 19, 21)


@dataclass(frozen=True)
class CheckReport:
    scope: str
    checks: int
    failures: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def check_g_coverage(c_max: int) -> CheckReport:
    """Every enumerated triple, in both leg orders, inverts to family
    coordinates that regenerate it."""
    checks = 0
    for t in enumerate_ppts(c_max):
        for ordered in (t, Triple(t.b, t.a, t.c)):
            checks += 1
            try:
                gc, n = invert_to_family(ordered)
            except ValueError as exc:
                return CheckReport("g-coverage", checks, 1, f"{ordered}: {exc}")
            if family_triple(gc, n) != ordered:
                return CheckReport(
                    "g-coverage",
                    checks,
                    1,
                    f"{ordered} not regenerated at g={gc.g}, n={n}",
                )
    return CheckReport("g-coverage", checks, 0)


def check_f_coverage(
    c_max: int,
    gaps: tuple[int, ...] = (1, 7, 17),
    m_lo: int = -12,
    m_hi: int = 12,
) -> CheckReport:
    """Every enumerated triple with legs `f` apart shows up in the
    exponent sweep, for each sampled admissible f."""
    generated = {
        f: {ft.triple.as_tuple() for ft in generate_f_triples(admissible_f(f), m_lo, m_hi)}
        for f in gaps
    }
    checks = 0
    for t in enumerate_ppts(c_max):
        lo, hi = min(t.a, t.b), max(t.a, t.b)
        f = hi - lo
        if f not in generated:
            continue
        checks += 1
        if (lo, hi, t.c) not in generated[f]:
            return CheckReport(
                "f-coverage",
                checks,
                1,
                f"({lo}, {hi}, {t.c}) missing from the f={f} sweep",
            )
    return CheckReport("f-coverage", checks, 0)


def check_nonexistence(
    c_max: int,
    hyp_gaps: tuple[int, ...] = HYP_GAP_SAMPLE,
    leg_gaps: tuple[int, ...] = LEG_GAP_SAMPLE,
) -> CheckReport:
    """No enumerated triple carries an inadmissible hypotenuse or leg gap."""
    hyp, leg = set(hyp_gaps), set(leg_gaps)
    checks = 0
    for t in enumerate_ppts(c_max):
        checks += 1
        for gap in (t.c - t.a, t.c - t.b):
            if gap in hyp:
                return CheckReport(
                    "nonexistence", checks, 1, f"{t} has hypotenuse gap {gap}"
                )
        if abs(t.a - t.b) in leg:
            return CheckReport(
                "nonexistence", checks, 1, f"{t} has leg gap {abs(t.a - t.b)}"
            )
    return CheckReport("nonexistence", checks, 0)


def check_pell(m_max: int, y_max: int = 100_000) -> CheckReport:
    """Negative Pell solutions, recurrence vs plain multiplication, and the
    exhaustive converse over 0 < y <= y_max."""
    checks = 0
    for m in range(-m_max, m_max + 1):
        checks += 1
        try:
            neg_pell_solution(m)  # validates its own defining equation
        except ValueError as exc:
            return CheckReport("pell", checks, 1, f"m={m}: {exc}")
    rng = random.Random(0x5EED)
    sample = [QuadInt(rng.randint(-999, 999), rng.randint(-999, 999)) for _ in range(20)]
    for t in sample:
        acc = t
        for n in range(m_max + 1):
            checks += 1
            if apply_delta_power(t, n) != acc:
                return CheckReport(
                    "pell", checks, 1, f"recurrence mismatch at t={t}, n={n}"
                )
            acc = acc * DELTA
    known = set()
    m = 0
    while True:
        sol = neg_pell_solution(m)
        if sol.y > y_max:
            break
        known.add((sol.x, sol.y))
        m += 1
    for y in range(1, y_max + 1):
        t = 2 * y * y - 1
        x = math.isqrt(t)
        if x * x != t:
            continue
        checks += 1
        if (x, y) not in known:
            return CheckReport(
                "pell", checks, 1, f"({x}, {y}) solves the equation but is not GAMMA*DELTA^m"
            )
    return CheckReport("pell", checks, 0)


def brute_pair_counts(b_max: int) -> dict[str, list[int]]:
    """Prefix pair counts per parity class from a raw double loop with
    explicit gcd tests; index B holds the count for bound B."""
    pool = [0] * (b_max + 1)
    go = [0] * (b_max + 1)
    gee = [0] * (b_max + 1)
    geo = [0] * (b_max + 1)
    for k in range(2, b_max + 1):
        n_pool = n_go = n_gee = n_geo = 0
        for m in range(1, k):
            if math.gcd(k, m) == 1:
                n_pool += 1
                if k % 2:
                    if m % 2:
                        n_go += 1
                    else:
                        n_gee += 1
                elif m % 2:
                    n_geo += 1
        pool[k] = pool[k - 1] + n_pool
        go[k] = go[k - 1] + n_go
        gee[k] = gee[k - 1] + n_gee
        geo[k] = geo[k - 1] + n_geo
    return {"pool": pool, "GO": go, "GEE": gee, "GEO": geo}


def check_density_cross(b_max: int, sieve: TotientSieve | None = None) -> CheckReport:
    """Formula-based counts match the raw pair enumeration at every bound."""
    if sieve is None:
        sieve = build_sieve(b_max)
    brute = brute_pair_counts(b_max)
    formulas = {
        "pool": count_pool,
        "GO": count_GO,
        "GEE": count_GEE,
        "GEO": count_GEO,
    }
    checks = 0
    for B in range(1, b_max + 1):
        for name, fn in formulas.items():
            checks += 1
            got, want = fn(B, sieve), brute[name][B]
            if got != want:
                return CheckReport(
                    "density-cross",
                    checks,
                    1,
                    f"{name}({B}) formula gives {got}, enumeration gives {want}",
                )
    return CheckReport("density-cross", checks, 0)
