"""Command line interface.

Exit codes: 0 success, 1 analysis error, 2 input or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, report
from .errors import AnalysisError, InputError, NotFoundError, format_vector
from .levi import DEFAULT_MAX_DISTRIBUTIONS, levi_screen
from .liecore import StructureTable, validate_lie_algebra
from .series import is_nilpotent
from .textformat import read_algebra_file, serialize_algebra


def load(ref: str) -> tuple[str, StructureTable]:
    """Resolve a catalog id or a path to an algebra file."""
    path = Path(ref)
    if path.is_file():
        return path.stem, read_algebra_file(path)
    try:
        entry = catalog.catalog_lookup(ref)
    except NotFoundError:
        if path.suffix or "/" in ref:
            raise NotFoundError(f"no such file: {ref}") from None
        raise
    return entry.id, entry.table


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS
    parser.add_argument("--json", action="store_true", default=default if suppress else False, help="emit JSON")
    parser.add_argument(
        "--max-distributions",
        type=int,
        default=default if suppress else DEFAULT_MAX_DISTRIBUTIONS,
        metavar="N",
        help="weight-screen budget (default %(default)s)" if not suppress else "weight-screen budget",
    )
    parser.add_argument(
        "--plot-dir",
        default=default if suppress else None,
        metavar="DIR",
        help="also write PNG figures of the series and flag into DIR",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilext",
        description="Solvable and Levi extension screens for nilpotent Lie algebras.",
    )
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("algebra", help="catalog id (see 'catalog list') or path to an algebra file")
        return p

    algebra_cmd("info", "summary: series, derivations, bound, flag and screens")
    p = algebra_cmd("series", "derived, lower or upper central series")
    p.add_argument("--kind", choices=sorted(report.SERIES_KINDS), default="lower")
    algebra_cmd("derivations", "dimensions of the derivation algebra")
    algebra_cmd("bound", "upper bound on nilindependent derivations")
    algebra_cmd("flag", "longest chain of characteristic ideals")
    p = algebra_cmd("screen", "Levi extension screens")
    p.add_argument("--factor", default="all", help="sl2, so3 or all (default all)")

    cat = sub.add_parser("catalog", parents=[common], help="built-in algebras")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    cat_sub.add_parser("list", parents=[common], help="list catalog ids")
    show = cat_sub.add_parser("show", parents=[common], help="print an algebra in file format")
    show.add_argument("id")

    check = sub.add_parser("check", parents=[common], help="validate an algebra file")
    check.add_argument("file")
    return parser


def _emit(rep: dict, args) -> None:
    sys.stdout.write(report.render_report(rep, "json" if args.json else "text"))


def _plots(rep: dict, args, table: StructureTable) -> None:
    if not args.plot_dir:
        return
    from . import plotting

    written = []
    if is_nilpotent(table):
        dims = rep.get("series_dims") or {
            k: list(report.characteristic_series(table, v).dims) for k, v in report.SERIES_KINDS.items()
        }
        written.append(plotting.plot_series(dims, rep["algebra"], args.plot_dir))
        if rep.get("flag"):
            written.append(plotting.plot_flag(rep["flag"], rep["algebra"], args.plot_dir))
    for path in written:
        print(f"wrote {path}", file=sys.stderr)


def _run(args) -> int:
    cmd = args.command
    if cmd == "catalog":
        if args.catalog_command == "list":
            entries = catalog.all_entries()
            if args.json:
                data = [
                    {"id": e.id, "dim": e.table.dim, "provenance": e.provenance, "note": e.source_note}
                    for e in entries
                ]
                print(json.dumps({"entries": data, "families": catalog.family_patterns()}, indent=2))
            else:
                for e in entries:
                    print(f"{e.id}\t{e.table.dim}\t{e.provenance}\t{e.source_note}".rstrip())
                for pattern in catalog.family_patterns():
                    print(f"{pattern}\t\tstandard-family")
            return 0
        entry = catalog.catalog_lookup(args.id)
        if args.json:
            brackets = [
                {"j": j, "k": k, "terms": [[l, str(c)] for l, c in terms]} for (j, k), terms in entry.table.entries
            ]
            print(json.dumps({"id": entry.id, "dim": entry.table.dim, "provenance": entry.provenance,
                              "note": entry.source_note, "brackets": brackets}, indent=2))
        else:
            header = f"{entry.id} ({entry.provenance})" + (f"\n{entry.source_note}" if entry.source_note else "")
            sys.stdout.write(serialize_algebra(entry.table, header))
        return 0

    if cmd == "check":
        table = read_algebra_file(args.file, validate=False)
        violations = validate_lie_algebra(table)
        if args.json:
            print(json.dumps({
                "file": args.file,
                "dim": table.dim,
                "valid": not violations,
                "nilpotent": is_nilpotent(table) if not violations else None,
                "violations": [{"triple": list(v.triple), "defect": format_vector(v.defect)} for v in violations],
            }, indent=2))
        else:
            for v in violations:
                j, k, l = v.triple
                print(f"jacobi violation at ({j},{k},{l}): defect {format_vector(v.defect)}")
            if not violations:
                kind = "nilpotent" if is_nilpotent(table) else "not nilpotent"
                print(f"ok: Lie algebra of dimension {table.dim} ({kind})")
        return 2 if violations else 0

    name, table = load(args.algebra)
    rep = report.base_report(name, table)
    if cmd == "info":
        rep = report.full_report(name, table, "all", args.max_distributions)
    elif cmd == "series":
        report.add_series(rep, table, args.kind)
    elif cmd == "derivations":
        report.add_derivations(rep, table)
    elif cmd == "bound":
        report.add_bound(rep, table)
    elif cmd == "flag":
        report.add_flag(rep, table)
    elif cmd == "screen":
        report.add_flag(rep, table)
        report.add_screen(rep, levi_screen(table, args.factor, name, args.max_distributions))
    _emit(rep, args)
    _plots(rep, args, table)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_distributions < 1:
        parser.error("--max-distributions must be positive")
    try:
        return _run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AnalysisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
