"""Command-line front end.

Exit codes: 0 all checks pass, 1 findings present, 2 usage or data errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import cohomology as coh
from . import octonions as octo
from . import sp6
from . import structures as st
from . import study
from . import suites
from .f2core import subspaces

ENUM_KINDS = (
    "odd",
    "even",
    "steiner",
    "gopel",
    "isotropic_plane",
    "tetrad",
    "azygetic",
    "heptad",
    "quadric",
    "off_quadric",
    "ennead",
    "lines",
)


def _enumerate(kind: str) -> tuple[list[str], list[list]]:
    if kind == "odd":
        return ["theta"], [[t.shift] for t in st.thetas_by_parity(1)]
    if kind == "even":
        return ["theta"], [[t.shift] for t in st.thetas_by_parity(0)]
    if kind == "steiner":
        return ["key", "members"], [[c.key, list(c.codes())] for c in st.all_steiner_complexes()]
    if kind == "gopel":
        return ["points"], [[list(g.points)] for g in st.gopel_subsets()]
    if kind == "isotropic_plane":
        return ["points"], [[list(p.nonzero)] for p in subspaces(2, isotropic_only=True)]
    if kind == "tetrad":
        return ["thetas"], [[list(t.codes())] for t in st.syzygetic_tetrads()]
    if kind == "azygetic":
        return ["keys"], [[list(a.codes())] for a in st.azygetic_triads()]
    if kind == "heptad":
        return ["thetas", "even"], [[list(h.codes()), st.heptad_even_theta(h).shift] for h in st.aronhold_heptads()]
    if kind == "quadric":
        return ["point"], [[p] for p in study.QUADRIC]
    if kind == "off_quadric":
        return ["point"], [[p] for p in study.OFF_QUADRIC]
    if kind == "ennead":
        return ["points"], [[list(e)] for e in study.enneads()]
    if kind == "lines":
        cs = map(study.classify_lines_through, study.OFF_QUADRIC)
        return ["point", "n0", "n1", "n2"], [[c.point, c.n0, c.n1, c.n2] for c in cs]
    raise ValueError(kind)


# --- rendering ------------------------------------------------------------------------


def dump_records(records) -> str:
    """JSON array with one record per line."""
    if not records:
        return "[]\n"
    return "[\n" + ",\n".join("  " + json.dumps(r) for r in records) + "\n]\n"


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return dump_records([dict(zip(header, r)) for r in rows])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows([_cell(v) for v in r] for r in rows)
        return buf.getvalue()
    cells = [header] + [[_cell(v) for v in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _check_rows(checks) -> tuple[list[str], list[list]]:
    header = ["suite", "name", "pass", "expected", "observed", "known"]
    rows = [[c.suite, c.name, c.passed, c.expected, c.observed, c.known if not c.passed else ""] for c in checks]
    return header, rows


def _status(checks, allow_known: bool) -> int:
    failing = [c for c in checks if not c.passed and not (allow_known and c.known)]
    return 1 if failing else 0


# --- commands -------------------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    header, rows = _enumerate(args.kind)
    out.write(render(header, rows, args.format))
    return 0


def cmd_verify(args, out) -> int:
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    ts = coh.load_tables(args.data_dir) if {"cohomology", "ranks"} & set(names) else None
    checks = []
    for name in names:
        checks.extend(suites.run_suite(name, ts, args.budget))
    if args.suite == "stabilizers" and args.format == "json":
        out.write(dump_records(suites.orbit_records()))
        return _status(checks, args.allow_known)
    out.write(render(*_check_rows(checks), args.format))
    return _status(checks, args.allow_known)


def _structure(ts, name):
    if name not in ts.characters:
        raise coh.UnknownStructure(name)
    return name


def cmd_poincare(args, out) -> int:
    ts = coh.load_tables(args.data_dir)
    p = coh.poincare(ts, _structure(ts, args.structure))
    printed = ts.printed_poincare.get(args.structure)
    rows = [[args.structure, p.ascending_str(), list(p.padded(7)),
             printed.ascending_str() if printed else None, printed == p if printed else None]]
    out.write(render(["structure", "poincare", "coefficients", "printed", "agrees"], rows, args.format))
    return 0


def cmd_points(args, out) -> int:
    ts = coh.load_tables(args.data_dir)
    p = coh.point_count(ts, _structure(ts, args.structure))
    printed = ts.printed_points.get(args.structure)
    row = [args.structure, str(p), list(p.padded(7)), str(printed) if printed else None,
           printed == p if printed else None]
    header = ["structure", "points", "coefficients", "printed", "agrees"]
    if args.q is not None:
        header.append("value")
        row.append(p(args.q))
    out.write(render(header, [row], args.format))
    return 0


def cmd_octonion_table(args, out) -> int:
    table = octo.full_table()
    labels = [f"e{i}" for i in range(8)]
    if args.format == "json":
        doc = {"labels": labels, "table": [[str(c) for c in row] for row in table]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    rows = [[labels[i]] + [str(c) for c in row] for i, row in enumerate(table)]
    out.write(render([""] + labels, rows, args.format))
    return 0


def cmd_audit(args, out) -> int:
    ts = coh.load_tables(args.data_dir)
    report = coh.audit(ts, ranks=suites.rank_values())
    if args.format == "json":
        out.write('{"checks": ' + dump_records([c.as_dict() for c in report.checks]).rstrip())
        out.write(',\n"findings": ' + dump_records([f.as_dict() for f in report.findings]).rstrip() + "}\n")
    else:
        out.write(render(*_check_rows(report.checks), args.format))
        if args.format == "table":
            out.write("\nfindings:\n")
            for f in report.findings:
                out.write(f"  [{'known' if f.known else 'NEW'}] {f.id}: {f.message}\n")
    bad = report.unknown_findings() if args.allow_known else report.findings
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--data-dir", default=None, help=f"table documents (default: ${coh.ENV_DATA_DIR} or bundled)")
    common.add_argument("--budget", type=int, default=sp6.DEFAULT_BUDGET, help="Sp(6,2) closure element cap")
    common.add_argument("--allow-known", action="store_true", help="do not fail on documented findings")

    p = argparse.ArgumentParser(prog="qatlas", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list a structure set in canonical order")
    e.add_argument("kind", choices=ENUM_KINDS)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    v.set_defaults(func=cmd_verify)

    pp = sub.add_parser("poincare", parents=[common], help="Poincare polynomial by Frobenius reciprocity")
    pp.add_argument("structure", choices=coh.STRUCTURES)
    pp.set_defaults(func=cmd_poincare)

    pt = sub.add_parser("points", parents=[common], help="point count over F_q")
    pt.add_argument("structure", choices=coh.STRUCTURES)
    pt.add_argument("--q", type=int, default=None, help="evaluate at this q")
    pt.set_defaults(func=cmd_points)

    o = sub.add_parser("octonion-table", parents=[common], help="the generated 8x8 product table")
    o.set_defaults(func=cmd_octonion_table)

    a = sub.add_parser("audit", parents=[common], help="cross-check all ingested tables")
    a.set_defaults(func=cmd_audit)
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except coh.LoadError as e:
        print(f"qatlas: data error: {e}", file=sys.stderr)
        return 2
    except sp6.BudgetExceeded as e:
        print(f"qatlas: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
