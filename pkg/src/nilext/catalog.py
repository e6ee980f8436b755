"""Built-in nilpotent Lie algebras: low-dimensional tables and standard families."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotFoundError
from .liecore import StructureTable

VERBATIM = "verbatim"
CORRECTED = "corrected"
STANDARD_FAMILY = "standard-family"
EXTERNAL = "external"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    table: StructureTable
    provenance: str
    source_note: str = ""


def _t(dim, *brackets) -> StructureTable:
    return StructureTable.from_brackets(dim, [((j, k), terms) for j, k, terms in brackets])


_A53 = ((3, 4, {2: 1}), (3, 5, {1: 1}), (4, 5, {3: 1}))

# Table of A_{6,18} exactly as printed; it violates Jacobi on (e1, e2, e3).
A_6_18_AS_PRINTED = _t(
    6, (1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {6: 1}), (2, 3, {5: 1}), (2, 4, {6: 1})
)


def _a614(eps: int) -> StructureTable:
    return _t(6, (1, 3, {4: 1}), (1, 4, {6: 1}), (2, 3, {5: 1}), (2, 5, {6: eps}))


_FIXED: dict[str, CatalogEntry] = {
    e.id: e
    for e in [
        CatalogEntry("A_3_1", _t(3, (2, 3, {1: 1})), VERBATIM, "Heisenberg algebra h_1"),
        CatalogEntry("A_4_1", _t(4, (2, 4, {1: 1}), (3, 4, {2: 1})), VERBATIM, "filiform, dim 4"),
        CatalogEntry("A_5_1", _t(5, (3, 5, {1: 1}), (4, 5, {2: 1})), VERBATIM),
        CatalogEntry("A_5_2", _t(5, (2, 5, {1: 1}), (3, 5, {2: 1}), (4, 5, {3: 1})), VERBATIM),
        CatalogEntry("A_5_3", _t(5, *_A53), VERBATIM),
        CatalogEntry("A_5_5", _t(5, (3, 4, {1: 1}), (2, 5, {1: 1}), (3, 5, {2: 1})), VERBATIM),
        CatalogEntry(
            "A_5_6",
            _t(5, (2, 5, {1: 1}), (3, 4, {1: 1}), (3, 5, {2: 1}), (4, 5, {3: 1})),
            VERBATIM,
        ),
        CatalogEntry("A_6_8", _t(6, *_A53, (6, 4, {2: 1})), VERBATIM, "A_5_3 plus [e6,e4]=e2"),
        CatalogEntry("A_6_9", _t(6, *_A53, (6, 4, {1: 1})), VERBATIM, "A_5_3 plus [e6,e4]=e1"),
        CatalogEntry(
            "A_6_13",
            _t(6, (1, 2, {5: 1}), (1, 3, {4: 1}), (1, 4, {6: 1}), (2, 5, {6: 1})),
            VERBATIM,
        ),
        CatalogEntry("A_6_14_p", _a614(1), VERBATIM, "epsilon = +1"),
        CatalogEntry("A_6_14_m", _a614(-1), VERBATIM, "epsilon = -1"),
        CatalogEntry(
            "A_6_15",
            _t(6, (1, 2, {3: 1, 5: 1}), (1, 3, {4: 1}), (1, 4, {6: 1}), (2, 5, {6: 1})),
            VERBATIM,
        ),
        CatalogEntry(
            "A_6_18",
            _t(6, (1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {6: 1}), (2, 3, {5: 1}), (2, 5, {6: 1})),
            CORRECTED,
            "printed table has [e2,e4]=e6, which fails Jacobi on (1,2,3); [e2,e5]=e6 restores it",
        ),
    ]
}

_ALIASES = {
    "A_6_14(+1)": "A_6_14_p",
    "A_6_14(1)": "A_6_14_p",
    "A_6_14(-1)": "A_6_14_m",
}

# Ids from the six-dimensional classification that are known but not bundled.
RESERVED = {f"A_6_{i}" for i in range(1, 23)} - set(_FIXED) | {"A_5_4"}

_FAMILY = re.compile(r"^(abelian|heisenberg|filiform|triangular|t)\((\d+)\)$")


def normalize_id(name: str) -> str:
    """Accept ``A_{5,3}``, ``A5_3``, ``a_5_3`` and similar spellings."""
    s = name.strip().replace(" ", "")
    m = re.fullmatch(r"[Aa]_?\{?(\d)[,_](\d+)\}?(.*)", s)
    if m:
        s = f"A_{m.group(1)}_{m.group(2)}{m.group(3)}"
    return _ALIASES.get(s, s)


def abelian(n: int) -> StructureTable:
    return StructureTable.abelian(n)


def heisenberg(m: int) -> StructureTable:
    """``h_m`` of dimension ``2m+1`` with ``[e_{2k}, e_{2k+1}] = e_1``."""
    return StructureTable.from_brackets(2 * m + 1, {(2 * k, 2 * k + 1): {1: 1} for k in range(1, m + 1)})


def filiform(n: int) -> StructureTable:
    """Model filiform algebra ``[e_1, e_k] = e_{k+1}``, k = 2..n-1."""
    return StructureTable.from_brackets(n, {(1, k): {k + 1: 1} for k in range(2, n)})


def triangular(n: int) -> StructureTable:
    """Strictly upper triangular ``n x n`` matrices.

    The unit matrices ``E_ij`` (i < j) are ordered by decreasing ``j - i``,
    then by ``i``, so the deepest commutators come first.
    """
    units = sorted(((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda p: (-(p[1] - p[0]), p[0]))
    index = {p: a + 1 for a, p in enumerate(units)}
    brackets = {}
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if a < b:
                terms = {}
                if j == k:
                    terms[index[(i, l)]] = 1
                if l == i:
                    terms[index[(k, j)]] = -1
                if terms:
                    brackets[(a, b)] = terms
    return StructureTable.from_brackets(len(units), brackets)


_FAMILIES = {
    "abelian": (abelian, 1, "abelian(n), n >= 1"),
    "heisenberg": (heisenberg, 1, "heisenberg(m), dim 2m+1, m >= 1"),
    "filiform": (filiform, 3, "filiform(n), n >= 3"),
    "triangular": (triangular, 3, "triangular(n) or t(n), n >= 3"),
}


def catalog_ids() -> list[str]:
    return sorted(_FIXED, key=_sort_key)


def family_patterns() -> list[str]:
    return [note for _, _, note in _FAMILIES.values()]


def _sort_key(name: str):
    parts = name.split("_")
    return (int(parts[1]), int(parts[2]), name) if len(parts) >= 3 else (99, 0, name)


def catalog_lookup(name: str) -> CatalogEntry:
    key = normalize_id(name)
    if key in _FIXED:
        return _FIXED[key]
    m = _FAMILY.match(key)
    if m:
        family = "triangular" if m.group(1) == "t" else m.group(1)
        build, lowest, note = _FAMILIES[family]
        size = int(m.group(2))
        if size < lowest:
            raise NotFoundError(f"{family}({size}) is not defined; expected {note}")
        return CatalogEntry(f"{family}({size})", build(size), STANDARD_FAMILY, note)
    available = ", ".join(catalog_ids() + family_patterns())
    if key in RESERVED:
        raise NotFoundError(f"{key} is reserved but not bundled; load it from a file. Available: {available}")
    raise NotFoundError(f"unknown algebra {name!r}. Available: {available}")


def all_entries() -> list[CatalogEntry]:
    return [_FIXED[i] for i in catalog_ids()]
