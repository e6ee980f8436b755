"""Report assembly and rendering (text table or JSON)."""

from __future__ import annotations

import json

from .derivations import derivation_space, is_characteristically_nilpotent
from .errors import format_vector
from .extensions import bound_annotations, solvable_extension_bound
from .levi import DEFAULT_MAX_DISTRIBUTIONS, ScreenReport, build_characteristic_flag, levi_screen
from .liecore import StructureTable
from .series import associated_graded, characteristic_series, is_nilpotent, lower_term

SERIES_KINDS = {"derived": "derived", "lower": "lower_central", "upper": "upper_central"}


def base_report(algebra: str, table: StructureTable) -> dict:
    """The fixed schema with every section empty."""
    nilpotent = is_nilpotent(table)
    if not nilpotent:
        layers = []
    elif table.is_abelian:
        layers = [table.dim]
    else:
        layers = list(associated_graded(table).layer_dims)
    return {
        "algebra": algebra,
        "dims": {"n": table.dim, "n2": lower_term(table, 2).dim, "layers": layers},
        "bound": None,
        "flag": None,
        "screens": [],
        "annotations": [],
    }


def add_bound(report: dict, table: StructureTable) -> dict:
    report["bound"] = solvable_extension_bound(table)
    report["annotations"].extend(bound_annotations(table))
    return report


def add_flag(report: dict, table: StructureTable) -> dict:
    flag = build_characteristic_flag(table)
    report["flag"] = {
        "complete": flag.is_complete,
        "chain": [{"dim": s.dim, "recipe": r} for s, r in zip(flag.subspaces, flag.recipes)],
    }
    return report


def add_screen(report: dict, screen: ScreenReport) -> dict:
    report["screens"] = [r.as_dict() for r in screen.records]
    report["verdict"] = {
        "overall": screen.overall,
        "factors": dict(screen.factor_verdicts),
        "fired_first": screen.fired_first.rule if screen.fired_first else None,
    }
    for note in screen.annotations:
        if note not in report["annotations"]:
            report["annotations"].append(note)
    return report


def add_series(report: dict, table: StructureTable, kind: str) -> dict:
    chain = characteristic_series(table, SERIES_KINDS.get(kind, kind))
    report["series"] = {
        "kind": chain.kind,
        "dims": list(chain.dims),
        "terms": [[format_vector(v) for v in t.rows] for t in chain.terms],
    }
    return report


def add_derivations(report: dict, table: StructureTable) -> dict:
    space = derivation_space(table)
    total, inner, outer = space.dims
    report["derivations"] = {"total": total, "inner": inner, "outer": outer}
    if is_nilpotent(table):
        report["derivations"]["characteristically_nilpotent"] = is_characteristically_nilpotent(table)
    return report


def full_report(
    algebra: str, table: StructureTable, factor: str = "all", max_distributions: int = DEFAULT_MAX_DISTRIBUTIONS
) -> dict:
    report = base_report(algebra, table)
    report["series_dims"] = {
        kind: list(characteristic_series(table, full).dims) for kind, full in SERIES_KINDS.items()
    }
    add_derivations(report, table)
    if not is_nilpotent(table):
        report["annotations"].append("not nilpotent: bound, flag and screens are skipped")
        return report
    add_bound(report, table)
    add_flag(report, table)
    add_screen(report, levi_screen(table, factor, algebra, max_distributions))
    return report


def render_report(report: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    rows: list[tuple[str, str]] = [("algebra", report["algebra"])]
    d = report["dims"]
    rows.append(("dim n", str(d["n"])))
    rows.append(("dim n^2", str(d["n2"])))
    if d["layers"]:
        rows.append(("layers", " ".join(map(str, d["layers"]))))
    if "series" in report:
        s = report["series"]
        rows.append((f"{s['kind']} dims", " ".join(map(str, s["dims"]))))
    for kind, dims in report.get("series_dims", {}).items():
        rows.append((f"{kind} series dims", " ".join(map(str, dims))))
    if "derivations" in report:
        der = report["derivations"]
        rows.append(("derivations", f"total {der['total']}, inner {der['inner']}, outer {der['outer']}"))
        if "characteristically_nilpotent" in der:
            rows.append(("char. nilpotent", "yes" if der["characteristically_nilpotent"] else "no"))
    if report["bound"] is not None:
        rows.append(("extension bound", str(report["bound"])))
    if report["flag"] is not None:
        f = report["flag"]
        chain = " ⊂ ".join(c["recipe"] for c in f["chain"])
        dims = ",".join(str(c["dim"]) for c in f["chain"])
        rows.append(("flag", f"{'complete' if f['complete'] else 'incomplete'} ({dims})"))
        rows.append(("flag chain", chain))
    if "verdict" in report:
        v = report["verdict"]
        rows.append(("screen verdict", v["overall"]))
        for factor, verdict in v["factors"].items():
            rows.append((f"  {factor}", verdict))
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    if report["screens"]:
        lines.append("")
        lines.append("factor\trule\tverdict\twitness")
        for s in report["screens"]:
            lines.append(f"{s['factor']}\t{s['rule']}\t{s['verdict']}\t{s['witness']}")
    for note in report["annotations"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
