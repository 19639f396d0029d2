"""Command-line interface.

Four subcommands cover the pipeline: ``enumerate`` writes the catalog as
JSON, ``realize`` solves a single labeling and reports the configuration,
``matrices`` prints the generators with their relation residuals, and
``verify`` re-checks a previously written catalog file.

Exit codes: 0 on success, 1 when a verification fails, 2 for usage or
domain errors (bad arguments, inadmissible labelings).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog as cat
from .geometry import PlanarConfig, RealizationError, realize
from .labelings import (
    EXPECTED_COUNTS,
    CUSP_ORDER,
    CuspType,
    Labeling,
    enumerate_catalog,
    is_admissible,
)
from .moebius import GeneratorSet, build_generators, trace_check, verify_relations
from .svg import write_svg


def _sig(value: float) -> str:
    return f"{value:.15g}"


def _cpx(z: complex) -> str:
    return f"{_sig(z.real)}{'+' if z.imag >= 0 else '-'}{_sig(abs(z.imag))}i"


def _matrix_lines(name: str, m) -> str:
    return f"{name} = [[{_cpx(m.a)}, {_cpx(m.b)}], [{_cpx(m.c)}, {_cpx(m.d)}]]"


def _print_config(labeling: Labeling, config: PlanarConfig, out) -> None:
    print("labeling:", " ".join(str(v) for v in labeling), file=out)
    print("cusp:", CuspType.of(labeling).code, file=out)
    red_x = config.red.d * config.red.nx
    print(f"{'red:':<7}vertical line x = {_sig(red_x)}", file=out)
    for name in ("green", "blue"):
        line = config.face(name)
        slope, intercept = line.slope_intercept()
        sign = "+" if intercept >= 0 else "-"
        print(
            f"{name + ':':<7}y = {_sig(slope)}*x {sign} {_sig(abs(intercept))}"
            f"  (normal [{_sig(line.nx)}, {_sig(line.ny)}], offset {_sig(line.d)})",
            file=out,
        )
    back, top = config.back, config.top
    print(
        f"{'back:':<7}circle center ({_sig(back.cx)}, {_sig(back.cy)}) radius {_sig(back.r)}",
        file=out,
    )
    print(
        f"{'top:':<7}circle center ({_sig(top.cx)}, {_sig(top.cy)}) radius {_sig(top.r)}",
        file=out,
    )


def _print_generators(gens: GeneratorSet, out) -> None:
    for name, matrix in (("M1", gens.m1), ("M2", gens.m2), ("M3", gens.m3), ("M4", gens.m4)):
        print(_matrix_lines(name, matrix), file=out)
    relations = verify_relations(gens)
    print("relations:", file=out)
    for check in relations.checks:
        status = "ok" if check.ok else "FAIL"
        print(
            f"  {check.edge}: ({check.word})^{check.exponent}"
            f"  residual {check.residual:.3e}  {status}",
            file=out,
        )
    traces = trace_check(gens)
    print("traces:", file=out)
    for check in traces.checks:
        status = "ok" if check.ok else "FAIL"
        print(
            f"  {check.edge}: |tr {check.word}| = {_sig(check.trace_abs)}"
            f"  expected {_sig(check.expected)}  residual {check.residual:.3e}  {status}",
            file=out,
        )


def _parse_labeling(values: Sequence[int]) -> Labeling:
    labeling = Labeling(*values)
    admissible = is_admissible(labeling)
    if not admissible:
        raise ValueError(f"labeling is not admissible: {admissible.reason}")
    return labeling


def cmd_enumerate(args: argparse.Namespace) -> int:
    cusp = CuspType.from_code(args.cusp) if args.cusp else None
    items = enumerate_catalog()
    entries = cat.build_catalog(items, max_n=args.max_n, cusp=cusp)

    summary_parts = []
    total_families = total_specific = 0
    for cusp_type in CUSP_ORDER:
        if cusp is not None and cusp_type is not cusp:
            continue
        families = sum(
            1 for e in entries if e.cusp is cusp_type and e.family
        )
        specific = sum(
            1
            for e in entries
            if e.cusp is cusp_type and not e.family and e.family_n is None
        )
        total_families += families
        total_specific += specific
        summary_parts.append(f"C{cusp_type.code}: {families} + {specific}")
    summary = (
        f"{total_families} families, {total_specific} specific"
        f" ({'; '.join(summary_parts)})"
    )

    if args.output:
        cat.dump_catalog(entries, args.output)
        print(summary)
    else:
        cat.dump_catalog(entries, sys.stdout)
        print(summary, file=sys.stderr)

    for cusp_type in CUSP_ORDER:
        if cusp is not None and cusp_type is not cusp:
            continue
        expected_fam, expected_spec = EXPECTED_COUNTS[cusp_type]
        families = sum(1 for e in entries if e.cusp is cusp_type and e.family)
        specific = sum(
            1
            for e in entries
            if e.cusp is cusp_type and not e.family and e.family_n is None
        )
        if (families, specific) != (expected_fam, expected_spec):
            print(
                f"count mismatch for C{cusp_type.code}: got {families} families"
                f" + {specific} specific, expected {expected_fam} + {expected_spec}",
                file=sys.stderr,
            )
            return 1
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    labeling = _parse_labeling(args.labels)
    config = realize(labeling)
    _print_config(labeling, config, sys.stdout)
    if args.svg:
        write_svg(config, args.svg, labeling)
    if args.json:
        entry = cat.build_entry(labeling)
        cat.dump_catalog([entry], args.json)
    return 0


def cmd_matrices(args: argparse.Namespace) -> int:
    labeling = _parse_labeling(args.labels)
    config = realize(labeling)
    gens = build_generators(labeling, config)
    _print_generators(gens, sys.stdout)
    if args.json:
        entry = cat.build_entry(labeling)
        cat.dump_catalog([entry], args.json)
    if not verify_relations(gens).ok or not trace_check(gens).ok:
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    entries = cat.load_catalog(args.catalog)
    report = cat.verify_catalog(entries, samples=args.sample)
    print(f"checked {report.entries_checked} configurations")
    print(f"max angle residual:    {report.max_angle:.3e}")
    print(f"max relation residual: {report.max_relation:.3e}")
    print(f"max trace residual:    {report.max_trace:.3e}")
    print(f"max determinant drift: {report.max_det_drift:.3e}")
    print(f"max config drift:      {report.max_config_drift:.3e}")
    if report.failures:
        for failure in report.failures:
            print(f"FAIL {failure}", file=sys.stderr)
        print("FAIL")
        return 1
    print("PASS")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismcat",
        description=(
            "Enumerate, realize and verify hyperbolic triangular prisms "
            "with one ideal vertex."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="write the catalog as JSON")
    p_enum.add_argument("--max-n", type=int, default=None, metavar="N",
                        help="expand each family into instances up to N")
    p_enum.add_argument("--cusp", choices=["236", "244", "333"], default=None,
                        help="restrict to one cusp type")
    p_enum.add_argument("-o", "--output", default=None, metavar="FILE",
                        help="write JSON here instead of stdout")
    p_enum.set_defaults(func=cmd_enumerate)

    p_real = sub.add_parser("realize", help="solve one labeling")
    p_real.add_argument("labels", type=int, nargs=9, metavar="a")
    p_real.add_argument("--svg", default=None, metavar="FILE",
                        help="write an SVG rendering of the configuration")
    p_real.add_argument("--json", default=None, metavar="FILE",
                        help="write the full catalog entry as JSON")
    p_real.set_defaults(func=cmd_realize)

    p_mat = sub.add_parser("matrices", help="print generators and relations")
    p_mat.add_argument("labels", type=int, nargs=9, metavar="a")
    p_mat.add_argument("--json", default=None, metavar="FILE",
                       help="write the full catalog entry as JSON")
    p_mat.set_defaults(func=cmd_matrices)

    p_ver = sub.add_parser("verify", help="re-verify a catalog file")
    p_ver.add_argument("catalog", metavar="FILE")
    p_ver.add_argument("--sample", type=int, nargs="+", default=None, metavar="N",
                       help="free-slot values for spot-checking families"
                            " (values below a family's bound are skipped)")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RealizationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
