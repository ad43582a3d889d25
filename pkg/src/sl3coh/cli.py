"""Command line interface.

Three subcommands:

* cohomology: full report (boundary, Eisenstein, Euler, ghosts, identities)
  for one weight, as json, text, or markdown;
* euler-table: the 12 x 12 symbolic Euler table or a numeric sweep, as csv
  or markdown;
* verify: the cross-route verification suite; exits 1 on any failure, with
  the failures printed as JSON.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .boundary import GradedProfile, boundary_profile
from .checks import run_all
from .eisenstein import (
    eisenstein_profile,
    ghost_report,
    gl3_vanishes,
    total_cohomology,
)
from .euler import (
    euler_report,
    euler_table,
    gl3_euler,
    sl3_euler_wall,
    symbolic_table,
)
from .parity import case_classifier
from .rootsystem import HighestWeight


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return value


def _summand_json(s) -> dict:
    return {"kind": s.kind, "k": s.k, "mult": s.mult}


def _profile_json(profile: GradedProfile, degrees: range) -> dict:
    return {
        str(q): [_summand_json(s) for s in profile.summands(q)] for q in degrees
    }


def _summand_text(s) -> str:
    if s.kind == "TrivialLine":
        body = "Q"
    elif s.kind == "Cusp":
        body = f"S_{s.k}"
    else:
        body = "ghost?"
    return body if s.mult == 1 else f"{body}^{s.mult}"


def _profile_text(profile: GradedProfile, degrees: range) -> list[str]:
    out = []
    for q in degrees:
        summands = profile.summands(q)
        body = " + ".join(_summand_text(s) for s in summands) if summands else "0"
        out.append(f"  H^{q} = {body}")
    return out


def _empty_profile(lam: HighestWeight) -> GradedProfile:
    return GradedProfile.build(case_classifier(lam.sl3_part()), {})


def _report(args) -> dict:
    """Assemble the full cohomology report for one weight."""
    if args.group == "sl3":
        lam = HighestWeight(args.m1, args.m2)
        vanishes = False
    else:
        lam = HighestWeight(args.m1, args.m2, args.m3)
        vanishes = gl3_vanishes(lam)
    sl3 = lam.sl3_part()
    total = total_cohomology(lam, args.group)
    if vanishes:
        boundary = _empty_profile(sl3)
        eis_profile = _empty_profile(sl3)
        chi_eis = 0
        identities = {}
        ghosts = {str(q): "Zero" for q in range(5)}
        chi_wall = 0
        chi_closed = 0
        cell = None
    else:
        boundary = boundary_profile(sl3)
        eis = eisenstein_profile(sl3)
        eis_profile = eis.profile
        chi_eis = eis.chi_eis
        identities = eis.identities
        ghosts = {str(q): s for q, s in ghost_report(sl3).by_degree}
        report = euler_report(sl3)
        chi_wall, chi_closed = report.chi_wall, report.chi_closed
        cell = {
            "row": report.table_cell[0],
            "col": report.table_cell[1],
            "symbolic": report.table_cell[2],
        }
    weight = {"m1": lam.m1, "m2": lam.m2}
    if args.group == "gl3":
        weight["m3"] = lam.m3
        chi_wall = 0 if vanishes else sl3_euler_wall(sl3)
        chi_closed = gl3_euler(lam)
    return {
        "tool": "sl3coh",
        "version": __version__,
        "group": args.group,
        "weight": weight,
        "case_id": case_classifier(sl3),
        "vanishes": vanishes,
        "boundary": _profile_json(boundary, range(5)),
        "eisenstein": {
            "profile": _profile_json(eis_profile, range(4)),
            "chi_eis": chi_eis,
            "identities": identities,
        },
        "euler": {
            "chi_wall": chi_wall,
            "chi_closed": chi_closed,
            "table_cell": cell,
        },
        "ghost": ghosts,
        "total": {
            "self_dual": total.self_dual,
            "inner_known": total.inner_known,
        },
    }


def _render_report_text(report: dict) -> str:
    weight = report["weight"]
    name = f"({weight['m1']}, {weight['m2']}"
    if "m3" in weight:
        name += f", {weight['m3']}"
    name += ")"
    lines = [f"{report['group']} weight {name}, case {report['case_id']}"]
    if report["vanishes"]:
        lines.append("all cohomology vanishes (odd central character)")
    lines.append("boundary cohomology:")
    lines += _text_from_json(report["boundary"], 5)
    lines.append("eisenstein cohomology:")
    lines += _text_from_json(report["eisenstein"]["profile"], 4)
    lines.append(f"chi_eis = {report['eisenstein']['chi_eis']}")
    euler = report["euler"]
    lines.append(
        f"chi_h = {euler['chi_closed']} (torsion sum {euler['chi_wall']})"
    )
    if euler["table_cell"]:
        cell = euler["table_cell"]
        lines.append(
            f"table cell ({cell['row']}, {cell['col']}): {cell['symbolic']}"
        )
    ghost = [f"H^{q}: {s}" for q, s in sorted(report["ghost"].items())]
    lines.append("ghost classes: " + ", ".join(ghost))
    if report["eisenstein"]["identities"]:
        flags = ", ".join(
            f"{k}={'ok' if v else 'FAIL'}"
            for k, v in report["eisenstein"]["identities"].items()
        )
        lines.append("identities: " + flags)
    total = report["total"]
    lines.append(
        f"self dual: {total['self_dual']}, inner part known: "
        f"{total['inner_known']}"
    )
    return "\n".join(lines)


def _text_from_json(profile: dict, n: int) -> list[str]:
    out = []
    for q in range(n):
        summands = profile.get(str(q), [])
        parts = []
        for s in summands:
            body = "Q" if s["kind"] == "TrivialLine" else f"S_{s['k']}"
            parts.append(body if s["mult"] == 1 else f"{body}^{s['mult']}")
        out.append(f"  H^{q} = " + (" + ".join(parts) if parts else "0"))
    return out


def _render_report_md(report: dict) -> str:
    weight = report["weight"]
    name = f"({weight['m1']}, {weight['m2']}"
    if "m3" in weight:
        name += f", {weight['m3']}"
    name += ")"
    lines = [
        f"# {report['group']} weight {name}",
        "",
        f"case {report['case_id']}"
        + (", vanishes" if report["vanishes"] else ""),
        "",
        "| q | boundary | eisenstein | ghost |",
        "|---|----------|------------|-------|",
    ]
    for q in range(5):
        bd = _md_cell(report["boundary"].get(str(q), []))
        eis = _md_cell(report["eisenstein"]["profile"].get(str(q), [])) if q < 4 else ""
        ghost = report["ghost"][str(q)]
        lines.append(f"| {q} | {bd} | {eis} | {ghost} |")
    euler = report["euler"]
    lines += [
        "",
        f"chi_eis = {report['eisenstein']['chi_eis']}, "
        f"chi_h = {euler['chi_closed']} (torsion sum {euler['chi_wall']})",
    ]
    return "\n".join(lines)


def _md_cell(summands: list) -> str:
    parts = []
    for s in summands:
        body = "Q" if s["kind"] == "TrivialLine" else f"S_{s['k']}"
        parts.append(body if s["mult"] == 1 else f"{body}^{s['mult']}")
    return " + ".join(parts) if parts else "0"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_cohomology(args) -> int:
    report = _report(args)
    if args.format == "json":
        text = json.dumps(report, indent=2)
    elif args.format == "text":
        text = _render_report_text(report)
    else:
        text = _render_report_md(report)
    _emit(text, args.out)
    return 0


def cmd_euler_table(args) -> int:
    if args.symbolic:
        cells = [[cell.render() for cell in row] for row in symbolic_table()]
        if args.format == "csv":
            lines = ["m1_mod_12,m2_mod_12,cell"]
            for i, row in enumerate(cells):
                for j, cell in enumerate(row):
                    lines.append(f'{i},{j},"{cell}"')
        else:
            header = "| m1\\m2 | " + " | ".join(str(j) for j in range(12)) + " |"
            sep = "|---" * 13 + "|"
            lines = [header, sep]
            for i, row in enumerate(cells):
                lines.append(f"| {i} | " + " | ".join(row) + " |")
        _emit("\n".join(lines), args.out)
        return 0
    table = euler_table(args.m1_max, args.m2_max)
    if args.format == "csv":
        lines = ["m1,m2,chi"]
        for row in table:
            for cell in row:
                lines.append(f"{cell.m1},{cell.m2},{cell.value}")
    else:
        header = (
            "| m1\\m2 | "
            + " | ".join(str(c.m2) for c in table[0])
            + " |"
        )
        sep = "|---" * (len(table[0]) + 1) + "|"
        lines = [header, sep]
        for row in table:
            lines.append(
                f"| {row[0].m1} | " + " | ".join(str(c.value) for c in row) + " |"
            )
    _emit("\n".join(lines), args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_all(max_weight=args.max, seed=args.seed)
    lines = [
        f"verify: sweeps up to weight {report['max_weight']}, "
        f"seed {report['seed']}"
    ]
    for name, info in report["families"].items():
        status = "ok" if info["failures"] == 0 else f"{info['failures']} FAILED"
        lines.append(f"  {name}: {status}")
    if report["ok"]:
        lines.append("all checks passed")
        text = "\n".join(lines)
    else:
        lines.append("failures:")
        text = "\n".join(lines) + "\n" + json.dumps(
            report["failures"], indent=2
        )
    _emit(text, args.out)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3coh",
        description=(
            "Boundary and Eisenstein cohomology of SL3(Z) and GL3(Z) "
            "in exact arithmetic"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    coh = sub.add_parser("cohomology", help="full report for one weight")
    coh.add_argument("--group", required=True, choices=("sl3", "gl3"))
    coh.add_argument("--m1", required=True, type=_nonneg)
    coh.add_argument("--m2", required=True, type=_nonneg)
    coh.add_argument("--m3", type=int, help="determinant power (gl3 only)")
    coh.add_argument("--format", choices=("json", "text", "md"), default="json")
    coh.add_argument("--out", help="write output to this file")
    coh.set_defaults(fn=cmd_cohomology)

    table = sub.add_parser("euler-table", help="Euler characteristic tables")
    table.add_argument(
        "--symbolic", action="store_true", help="the 12 x 12 table of cells"
    )
    table.add_argument("--m1-max", type=_nonneg, help="numeric sweep bound for m1")
    table.add_argument("--m2-max", type=_nonneg, help="numeric sweep bound for m2")
    table.add_argument("--format", choices=("csv", "md"), default="md")
    table.add_argument("--out", help="write output to this file")
    table.set_defaults(fn=cmd_euler_table)

    verify = sub.add_parser("verify", help="run the cross-route checks")
    verify.add_argument("--max", type=_nonneg, default=60)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--out", help="write output to this file")
    verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "cohomology":
        if args.group == "sl3" and args.m3 is not None:
            parser.error("--m3 only applies to --group gl3")
        if args.group == "gl3" and args.m3 is None:
            parser.error("--group gl3 needs --m3")
    if args.command == "euler-table":
        if args.symbolic and (args.m1_max is not None or args.m2_max is not None):
            parser.error("--symbolic excludes --m1-max/--m2-max")
        if not args.symbolic and (args.m1_max is None or args.m2_max is None):
            parser.error("need either --symbolic or both --m1-max and --m2-max")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
