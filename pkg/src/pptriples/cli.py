"""Command-line interface: family generation, triple checking, density sweeps.

Commands: gen-g, gen-f, check, density, verify.  CSV (default) and JSON
Lines output; all runs are deterministic, with fixed sort orders and fixed
decimal rendering.  Exit codes:

    0  success
    1  malformed flags or input
    2  inadmissible gap
    3  input beyond the supported factorization range (>= 2**64)
    4  `check` input is not a primitive Pythagorean triple
    5  sieve memory budget refused
    6  `verify` found a property violation
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Iterable

from . import checks
from ._primes import UnsupportedRangeError
from .density import Family, SieveBudgetError, density_report, render_ratio
from .hyp_gap import classify_g, generate_g_family, invert_to_family
from .leg_gap import admissible_f, cf_elements, generate_f_triples
from .triples import Triple, classify_triple, is_primitive, to_params

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INADMISSIBLE = 2
EXIT_RANGE = 3
EXIT_NOT_PPT = 4
EXIT_BUDGET = 5
EXIT_VIOLATION = 6


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # lets exponent ranges with a negative start, e.g. -6..6, pass as values
        self._negative_number_matcher = re.compile(r"^-\d+(\.\.-?\d+)?$")

    # argparse exits with 2 on usage errors; the contract here is 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _positive(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _exponent_range(text: str) -> tuple[int, int]:
    """Parse 'lo..hi' (or a single integer) into an inclusive range."""
    lo, sep, hi = text.partition("..")
    try:
        m_lo = int(lo, 10)
        m_hi = int(hi, 10) if sep else m_lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an exponent range: {text!r}")
    if m_lo > m_hi:
        raise argparse.ArgumentTypeError(f"empty exponent range: {text!r}")
    return m_lo, m_hi


def _grid(text: str) -> list[int]:
    try:
        values = [int(part, 10) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated grid: {text!r}")
    if any(v < 2 for v in values):
        raise argparse.ArgumentTypeError("grid entries must be >= 2")
    if values != sorted(set(values)):
        raise argparse.ArgumentTypeError("grid must be strictly ascending")
    return values


def _emit(lines: Iterable[str], out_path: str | None) -> None:
    if out_path is None:
        for line in lines:
            print(line)
        return
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _jsonl(record: dict) -> str:
    return json.dumps(record, separators=(", ", ": "))


def cmd_gen_g(args: argparse.Namespace) -> int:
    gc = classify_g(args.g)
    if not gc.admissible:
        print(
            f"g={args.g} is inadmissible: " + "; ".join(gc.reasons),
            file=sys.stderr,
        )
        return EXIT_INADMISSIBLE
    items = generate_g_family(args.g, args.count)
    lines: list[str] = []
    if args.format == "json":
        lines.append(
            _jsonl({"record": "g_class", "g": gc.g, "kind": gc.kind.value, "m": gc.m})
        )
        for it in items:
            lines.append(
                _jsonl(
                    {
                        "record": "g_family_item",
                        "n": it.n,
                        "k": it.k,
                        "r": it.r,
                        "s": it.s,
                        "a": it.triple.a,
                        "b": it.triple.b,
                        "c": it.triple.c,
                        "stride": it.stride,
                        "offset": it.offset,
                    }
                )
            )
    else:
        lines.append(f"# g={gc.g} kind={gc.kind.value} m={gc.m}")
        lines.append("n,k,r,s,a,b,c,stride,offset")
        for it in items:
            t = it.triple
            lines.append(
                f"{it.n},{it.k},{it.r},{it.s},{t.a},{t.b},{t.c},{it.stride},{it.offset}"
            )
    _emit(lines, None)
    return EXIT_OK


def cmd_gen_f(args: argparse.Namespace) -> int:
    try:
        spec = admissible_f(args.f)
    except UnsupportedRangeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RANGE
    if not spec.admissible:
        print(
            f"f={args.f} is inadmissible: " + "; ".join(spec.reasons),
            file=sys.stderr,
        )
        return EXIT_INADMISSIBLE
    m_lo, m_hi = args.m
    elements = cf_elements(spec)
    triples = sorted(
        generate_f_triples(spec, m_lo, m_hi), key=lambda ft: ft.triple.as_tuple()
    )
    factor_text = " ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in spec.factorization)
    lines: list[str] = []
    if args.format == "json":
        lines.append(
            _jsonl(
                {
                    "record": "f_spec",
                    "f": spec.f,
                    "admissible": spec.admissible,
                    "factorization": [list(pe) for pe in spec.factorization],
                }
            )
        )
        for elem in elements:
            lines.append(
                _jsonl(
                    {
                        "record": "cf_element",
                        "u_x": elem.u.x,
                        "u_y": elem.u.y,
                        "choices": list(elem.choices),
                    }
                )
            )
        for ft in triples:
            t = ft.triple
            lines.append(
                _jsonl(
                    {
                        "record": "f_triple",
                        "a": t.a,
                        "b": t.b,
                        "c": t.c,
                        "m": ft.m,
                        "sign": ft.sign,
                        "u_x": ft.cf_choice.u.x,
                        "u_y": ft.cf_choice.u.y,
                    }
                )
            )
    else:
        lines.append(f"# f={spec.f} admissible factorization={factor_text or '1'}")
        lines.append(
            "# generators: " + ", ".join(str(elem.u) for elem in elements)
        )
        lines.append("a,b,c,m,sign,u_x,u_y")
        for ft in triples:
            t = ft.triple
            u = ft.cf_choice.u
            lines.append(f"{t.a},{t.b},{t.c},{ft.m},{ft.sign},{u.x},{u.y}")
    _emit(lines, None)
    return EXIT_OK


def _check_fields(a: int, b: int, c: int) -> tuple[dict, int]:
    fields: dict = {
        "record": "check",
        "a": a,
        "b": b,
        "c": c,
        "pythagorean": False,
        "primitive": None,
        "even_leg": None,
        "r": None,
        "s": None,
        "g": None,
        "g_kind": None,
        "g_m": None,
        "g_n": None,
        "f": None,
    }
    try:
        t = Triple(a, b, c)
    except ValueError:
        return fields, EXIT_NOT_PPT
    fields["pythagorean"] = True
    cls = classify_triple(t)
    fields["primitive"] = cls.primitive
    fields["even_leg"] = cls.even_leg
    fields["f"] = cls.f
    if not is_primitive(t):
        return fields, EXIT_NOT_PPT
    pair = to_params(t)
    gc, n = invert_to_family(t)
    fields["r"], fields["s"] = pair.r, pair.s
    fields["g"] = t.c - t.b
    fields["g_kind"] = gc.kind.value
    fields["g_m"] = gc.m
    fields["g_n"] = n
    return fields, EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    fields, code = _check_fields(args.a, args.b, args.c)
    if args.format == "json":
        print(_jsonl(fields))
    else:
        names = [k for k in fields if k != "record"]
        print(",".join(names))
        print(",".join(_csv_cell(fields[k]) for k in names))
    return code


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_density(args: argparse.Namespace) -> int:
    try:
        rows = density_report(Family(args.family), args.grid)
    except SieveBudgetError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:  # e.g. a malformed PPT_SIEVE_BUDGET value
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    lines: list[str] = []
    if args.format == "json":
        for row in rows:
            lines.append(
                _jsonl(
                    {
                        "record": "density_row",
                        "B": row.B,
                        "family_count": row.family_count,
                        "pool_count": row.pool_count,
                        "ratio": render_ratio(row.ratio),
                        "predicted": render_ratio(row.predicted),
                    }
                )
            )
    else:
        lines.append("B,family_count,pool_count,ratio,predicted")
        for row in rows:
            lines.append(
                f"{row.B},{row.family_count},{row.pool_count},"
                f"{render_ratio(row.ratio)},{render_ratio(row.predicted)}"
            )
    _emit(lines, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    scope = args.scope
    if scope == "g-coverage":
        report = checks.check_g_coverage(args.c_max)
    elif scope == "f-coverage":
        report = checks.check_f_coverage(args.c_max)
    elif scope == "nonexistence":
        report = checks.check_nonexistence(args.c_max)
    elif scope == "pell":
        report = checks.check_pell(args.m_max)
    else:
        report = checks.check_density_cross(args.b_max)
    print(f"{report.scope}: {report.checks} checks, {report.failures} failures")
    if not report.ok:
        print(f"first counterexample: {report.counterexample}")
        print(f"FAIL {report.scope}")
        return EXIT_VIOLATION
    print(f"PASS {report.scope}")
    return EXIT_OK


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="pptriples",
        description="Generate, classify and verify primitive Pythagorean "
        "triples with fixed hypotenuse or leg gaps.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("gen-g", help="generate (a, b, b+g) family members")
    p.add_argument("--g", type=_positive, required=True, help="hypotenuse gap g = c - b")
    p.add_argument("--count", type=_positive, default=10, help="number of family members")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_gen_g)

    p = sub.add_parser("gen-f", help="generate (a, a+f, c) triples")
    p.add_argument("--f", type=_positive, required=True, help="leg gap f = b - a")
    p.add_argument(
        "--m",
        type=_exponent_range,
        required=True,
        metavar="LO..HI",
        help="inclusive exponent range, e.g. -3..3",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_gen_f)

    p = sub.add_parser("check", help="classify one candidate triple")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.add_argument("c", type=_positive)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("density", help="density sweep over a grid of bounds")
    p.add_argument(
        "--family", choices=[f.value for f in Family], required=True
    )
    p.add_argument(
        "--grid",
        type=_grid,
        required=True,
        help="strictly ascending comma-separated bounds, each >= 2",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="run an oracle-equivalence suite")
    p.add_argument(
        "scope",
        choices=("g-coverage", "f-coverage", "nonexistence", "pell", "density-cross"),
    )
    p.add_argument("--c-max", type=_positive, default=None)
    p.add_argument("--m-max", type=_positive, default=50)
    p.add_argument("--b-max", type=_positive, default=2000)
    p.set_defaults(func=cmd_verify)

    return parser


_VERIFY_DEFAULT_C_MAX = {
    "g-coverage": 100_000,
    "f-coverage": 1_000_000,
    "nonexistence": 1_000_000,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.c_max is None:
        args.c_max = _VERIFY_DEFAULT_C_MAX.get(args.scope, 100_000)
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())
