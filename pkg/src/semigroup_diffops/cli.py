"""Command line entry point ``semigroup-diffops``.

Exit status is 0 on success, 2 for bad input and 1 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import checks
from .errors import InvariantViolation, SemigroupError
from .ideals import PlaneIdeal, check_decomposition
from .report import Report, build_report
from .semigroup import NumericalSemigroup
from .sigma import build_sigma
from .weyl import d_algebra_generators, format_operator, parse_operator, preserves_semigroup_ring

_POINT = re.compile(r"^\(?(\d+),(\d+)\)?$")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("generators", nargs="+", type=int, help="generators of S")
    common.add_argument("--json", action="store_true", help="emit JSON (schema 1)")
    common.add_argument("--box", type=int, help="side of the verification window")
    common.add_argument("--verify", action="store_true", help="run brute-force cross-checks")
    common.add_argument("--unicode", action="store_true", help="print operators as t⁻¹∂²")

    parser = argparse.ArgumentParser(
        prog="semigroup-diffops",
        description="Numerical semigroups, gr D(C[S]) = C[Sigma] and related structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report on S and Sigma")
    p.add_argument("--blowup-chain", action="store_true")
    p.add_argument("--operators", action="store_true")
    p.add_argument("--overrings", action="store_true")

    sub.add_parser("sigma", parents=[common], help="generators, gaps and T(Sigma)")

    p = sub.add_parser("operators", parents=[common], help="generators of D(C[S])")
    p.add_argument("--check", action="append", default=[], metavar="OP",
                   help="test whether an operator such as 't^2 d' preserves C[S]")

    p = sub.add_parser("decompose", parents=[common],
                       help="irreducible decomposition; points follow '--', e.g. -- 4,3")
    p.add_argument("--point", action="append", default=[], metavar="A,B")

    sub.add_parser("overrings", parents=[common], help="oversemigroups and ideal classes")

    p = sub.add_parser("staircase", parents=[common], help="draw Sigma on a grid")
    p.add_argument("--width", type=int, default=12, help="columns, a = 0 .. width-1")
    p.add_argument("--height", type=int, default=12, help="rows, b = 0 .. height-1")
    p.add_argument("--svg", action="store_true", help="emit SVG instead of text")
    return parser


def _split_points(argv: list[str]) -> tuple[list[str], list[str]]:
    """Separate the ``-- a,b c,d`` tail used by ``decompose``."""
    if "--" not in argv:
        return argv, []
    i = argv.index("--")
    head, tail = argv[:i], argv[i + 1:]
    points = [x for x in tail if _POINT.match(x)]
    head += [x for x in tail if not _POINT.match(x)]
    return head, points


def _parse_point(text: str) -> tuple[int, int]:
    m = _POINT.match(text.replace(" ", ""))
    if not m:
        raise UsageError(f"cannot read point {text!r}; expected A,B")
    return int(m.group(1)), int(m.group(2))


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv, tail_points = _split_points(argv)
    args = _build_parser().parse_args(argv)
    try:
        out = _dispatch(args, tail_points)
    except (SemigroupError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def _dispatch(args: argparse.Namespace, tail_points: list[str]) -> str:
    if tail_points and args.command != "decompose":
        raise UsageError("points after '--' are only used by decompose")
    if args.box is not None and args.box <= 0:
        raise UsageError("--box must be positive")
    handler = {
        "analyze": _cmd_analyze,
        "sigma": _cmd_sigma,
        "operators": _cmd_operators,
        "decompose": _cmd_decompose,
        "overrings": _cmd_overrings,
        "staircase": _cmd_staircase,
    }[args.command]
    return handler(args, tail_points)


def _cmd_analyze(args, _points) -> str:
    report = build_report(
        args.generators,
        blowup_chain=args.blowup_chain,
        operators=args.operators,
        overrings=args.overrings,
        verify=args.verify,
        box=args.box,
        unicode=args.unicode,
    )
    return report.to_json() if args.json else render_report(report)


def _cmd_sigma(args, _points) -> str:
    report = build_report(args.generators, verify=args.verify, box=args.box)
    if args.json:
        return Report(report.schema, report.generators, report.semigroup, report.sigma,
                      verification=report.verification).to_json()
    return _render_sigma(report.sigma, report.semigroup)


def _cmd_operators(args, _points) -> str:
    S = NumericalSemigroup.from_generators(args.generators)
    if args.verify:
        problems = checks.verify_operators(S)
        if problems:
            raise InvariantViolation("; ".join(problems))
    rows = [
        {"generator": [p.a, p.b], "symbol": _symbol(p), "operator": format_operator(op, args.unicode)}
        for p, op in d_algebra_generators(S).items()
    ]
    checked = []
    for text in args.check:
        op = parse_operator(text)
        checked.append({"operator": format_operator(op, args.unicode),
                        "preserves": preserves_semigroup_ring(op, S)})
    if args.json:
        import json

        payload = {"schema": 1, "semigroup": list(S.minimal_generators), "operators": rows}
        if checked:
            payload["checks"] = checked
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    width = max(len(r["symbol"]) for r in rows)
    lines = [f"D(C[S]) for S = {S}: {len(rows)} generators"]
    lines += [f"  {r['symbol']:<{width}}  <-  {r['operator']}" for r in rows]
    for c in checked:
        verdict = "preserves" if c["preserves"] else "does not preserve"
        lines.append(f"{c['operator']} {verdict} C[S]")
    return "\n".join(lines)


def _symbol(p) -> str:
    parts = []
    for var, k in (("t", p.a), ("y", p.b)):
        if k:
            parts.append(var if k == 1 else f"{var}^{k}")
    return " ".join(parts) or "1"


def _cmd_decompose(args, tail_points) -> str:
    points = [_parse_point(x) for x in list(args.point) + tail_points]
    if not points:
        raise UsageError("give the ideal generators after '--', e.g. -- 4,3")
    S = NumericalSemigroup.from_generators(args.generators)
    sigma = build_sigma(S)
    ideal = PlaneIdeal(sigma, points)
    comps = ideal.decompose()
    box = args.box or ideal.scan_bound + 2
    problems = check_decomposition(ideal, comps, box)
    if args.verify:
        problems += checks.verify_decomposition(ideal, box)
    if problems:
        raise InvariantViolation("; ".join(problems[:10]))
    if args.json:
        import json

        return json.dumps(
            {
                "schema": 1,
                "semigroup": list(S.minimal_generators),
                "ideal": [list(p) for p in sorted(ideal.generators)],
                "components": [c.to_dict() for c in comps],
                "verified_box": box,
            },
            indent=2,
            sort_keys=True,
        )
    lines = [f"I = {ideal}", f"{len(comps)} irreducible components (checked on [0,{box})^2):"]
    lines += [f"  {c}" for c in comps]
    return "\n".join(lines)


def _cmd_overrings(args, _points) -> str:
    report = build_report(args.generators, overrings=True, verify=args.verify, box=args.box)
    ov = report.overrings
    if args.json:
        import json

        return json.dumps({"schema": 1, "semigroup": report.semigroup["minimal_generators"], **ov},
                          indent=2, sort_keys=True)
    lines = [f"S = <{', '.join(map(str, report.semigroup['minimal_generators']))}>: "
             f"{ov['overring_count']} overrings, {ov['class_count']} ideal classes, "
             + ("bijective" if ov["bijective"] else "not bijective")]
    for row in ov["fibers"]:
        gens = ", ".join(map(str, row["overring"]))
        classes = "; ".join(
            f"gaps {pattern}{'' if stable else ' (not stable)'}"
            for pattern, stable in zip(row["classes"], row["stable"])
        )
        sym = "symmetric" if row["symmetric"] else "not symmetric"
        lines.append(f"  <{gens}> ({sym}, conductor from {row['conductor_min']}): {classes}")
    return "\n".join(lines)


def _cmd_staircase(args, _points) -> str:
    if args.width <= 0 or args.height <= 0:
        raise UsageError("width and height must be positive")
    S = NumericalSemigroup.from_generators(args.generators)
    sigma = build_sigma(S)
    if args.verify:
        problems = checks.verify_sigma(sigma)
        if problems:
            raise InvariantViolation("; ".join(problems[:10]))
    return render_svg(sigma, args.width, args.height) if args.svg else render_text(
        sigma, args.width, args.height
    )


# -- rendering ----------------------------------------------------------------

def render_text(sigma, width: int, height: int) -> str:
    """``#`` member, ``T`` point of T(Sigma), ``.`` other gap; y grows upwards."""
    t = set() if sigma.base.is_naturals else sigma.t_sigma
    grid = sigma.grid(width, height)
    rows = []
    for b in reversed(range(height)):
        cells = "".join(
            "#" if grid[b][a] else ("T" if (a, b) in t else ".") for a in range(width)
        )
        rows.append(f"{b:>3} {cells}")
    return "\n".join(rows)


def render_svg(sigma, width: int, height: int, cell: int = 16) -> str:
    t = set() if sigma.base.is_naturals else sigma.t_sigma
    grid = sigma.grid(width, height)
    w, h = width * cell, height * cell
    rects = []
    for b in range(height):
        for a in range(width):
            if grid[b][a]:
                cls, fill = "member", "#2b6cb0"
            elif (a, b) in t:
                cls, fill = "t-sigma", "#dd6b20"
            else:
                cls, fill = "gap", "#ffffff"
            y = h - (b + 1) * cell
            rects.append(
                f'<rect class="{cls}" data-a="{a}" data-b="{b}" x="{a * cell}" y="{y}" '
                f'width="{cell}" height="{cell}" fill="{fill}" stroke="#999"/>'
            )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">\n' + "\n".join(rects) + "\n</svg>"
    )


def render_report(report: Report) -> str:
    sg = report.semigroup
    lines = [
        f"S = <{', '.join(map(str, sg['minimal_generators']))}>",
        f"  e = {sg['multiplicity']}, g = {sg['frobenius']}, n = {sg['n']}, delta = {sg['delta']}",
        f"  gaps: {sg['gaps']}",
    ]
    if sg["pseudo_frobenius"] is not None:
        lines.append(f"  pseudo-Frobenius: {sg['pseudo_frobenius']} (type {sg['type']})")
    flags = [name for name, key in (("MED", "max_embedding_dimension"), ("Arf", "arf"),
                                     ("symmetric", "symmetric")) if sg[key]]
    lines.append(f"  properties: {', '.join(flags) or 'none'}")
    lines.append(f"  multiplicity sequence: {sg['multiplicity_sequence']}")
    lines.append(_render_sigma(report.sigma, sg))
    if report.blowup_chain:
        lines.append("blowup chain:")
        for step in report.blowup_chain:
            gens = ", ".join(map(str, step["semigroup"]))
            extra = ""
            if "next_adds_t_sigma" in step:
                extra = "  (next Sigma adds exactly T(Sigma): " + (
                    "yes)" if step["next_adds_t_sigma"] else "NO)")
            lines.append(f"  <{gens}>  e = {step['multiplicity']}{extra}")
    if report.operators:
        lines.append("operators:")
        lines += [f"  {tuple(r['generator'])}: {r['operator']}" for r in report.operators]
    if report.overrings:
        ov = report.overrings
        lines.append(
            f"overrings: {ov['overring_count']}, ideal classes: {ov['class_count']}, "
            + ("bijective" if ov["bijective"] else "not bijective")
        )
    if report.verification:
        lines.append("verified: " + ", ".join(report.verification))
    return "\n".join(lines)


def _render_sigma(sigma: dict, sg: dict) -> str:
    def pts(xs):
        return ", ".join(f"({a},{b})" for a, b in xs)

    lines = [
        f"Sigma: mu = {sigma['mu']} minimal generators, {sigma['gap_count']} gaps",
        f"  generators: {pts(sigma['minimal_generators'])}",
        f"  gaps: {pts(sigma['gaps'])}",
    ]
    if sigma["t_sigma"] is not None:
        lines.append(f"  T(Sigma): {pts(sigma['t_sigma'])}")
    return "\n".join(lines)


if __name__ == "__main__":
    sys.exit(main())
