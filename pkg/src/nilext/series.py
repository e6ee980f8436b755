"""Characteristic series, centralizers and the associated graded algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import DimensionError, NotNilpotentError, format_vector
from .liecore import StructureTable, Subspace, bracket_subspaces
from .linalg import Vector

KINDS = ("derived", "lower_central", "upper_central")
_ALIASES = {"lower": "lower_central", "upper": "upper_central", "lcs": "lower_central", "ucs": "upper_central"}


@dataclass(frozen=True)
class SeriesChain:
    kind: str
    terms: tuple[Subspace, ...]
    stabilized: bool = True

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    @property
    def last(self) -> Subspace:
        return self.terms[-1]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


def _iterate(first: Subspace, step, kind: str) -> SeriesChain:
    terms = [first]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return SeriesChain(kind, tuple(terms))
        terms.append(nxt)


def characteristic_series(table: StructureTable, kind: str) -> SeriesChain:
    """Derived (``g^(0) = g``), lower central (``g^1 = g``) or upper central (``z_1``, ``z_2``, ...) series.

    Chains are computed until two consecutive terms agree and the repeated
    term is dropped, so a decreasing chain that dies keeps exactly one zero.
    """
    kind = _ALIASES.get(kind, kind)
    return _series_cached(table, kind)


@lru_cache(maxsize=512)
def _series_cached(table: StructureTable, kind: str) -> SeriesChain:
    n = table.dim
    full = Subspace.full(n)
    if kind == "derived":
        return _iterate(full, lambda t: bracket_subspaces(table, t, t), kind)
    if kind == "lower_central":
        return _iterate(full, lambda t: bracket_subspaces(table, t, full), kind)
    if kind == "upper_central":
        return _iterate(center(table), lambda t: relative_ideal(table, full, t), kind)
    raise ValueError(f"unknown series kind {kind!r}; expected one of {KINDS}")


def lower_central_series(table: StructureTable) -> SeriesChain:
    return characteristic_series(table, "lower_central")


def derived_series(table: StructureTable) -> SeriesChain:
    return characteristic_series(table, "derived")


def upper_central_series(table: StructureTable) -> SeriesChain:
    return characteristic_series(table, "upper_central")


def is_nilpotent(table: StructureTable) -> bool:
    return lower_central_series(table).last.dim == 0


def is_solvable(table: StructureTable) -> bool:
    return derived_series(table).last.dim == 0


def nilindex(table: StructureTable) -> int:
    """Degree of nilpotency: the largest K with ``n^K != 0``."""
    chain = lower_central_series(table)
    if chain.last.dim:
        raise NotNilpotentError("algebra is not nilpotent")
    return len(chain) - 1


def lower_term(table: StructureTable, k: int) -> Subspace:
    """``n^k`` (1-based; zero beyond the end of the chain)."""
    chain = lower_central_series(table)
    return chain[k - 1] if k <= len(chain) else chain.last


def relative_ideal(table: StructureTable, i: Subspace, j: Subspace) -> Subspace:
    """``{x : [x, y] in j for all y in i}``."""
    n = table.dim
    if i.ambient_dim != n or j.ambient_dim != n:
        raise DimensionError("subspace does not live in the algebra")
    functionals = j.annihilator().rows
    if not functionals or not i.rows:
        return Subspace.full(n)
    rows = []
    for y in i.rows:
        # column a of ad_y^T: [e_a, y]
        images = [table.bracket(linalg.unit(n, a), y) for a in range(n)]
        for phi in functionals:
            rows.append([sum((p * c for p, c in zip(phi, img) if p and c), Fraction(0)) for img in images])
    return Subspace(n, tuple(linalg.nullspace(rows, n)))


def centralizer(table: StructureTable, h: Subspace) -> Subspace:
    return relative_ideal(table, h, Subspace.zero(table.dim))


def center(table: StructureTable) -> Subspace:
    return centralizer(table, Subspace.full(table.dim))


@dataclass(frozen=True)
class GradedAlgebra:
    """``gr(n) = n/n^2 + n^2/n^3 + ...`` on a basis of layer complements.

    Graded basis vector ``i`` (1-based) is ``basis[i-1]`` in the source
    coordinates; its leading coordinate is ``e_i``, so homogeneous algebras get
    back their own labels.
    """

    layer_dims: tuple[int, ...]
    table: StructureTable
    layer_of_index: dict
    basis: tuple[Vector, ...]
    source: StructureTable

    @property
    def depth(self) -> int:
        return len(self.layer_dims)

    def layer_indices(self, k: int) -> tuple[int, ...]:
        return tuple(i for i in sorted(self.layer_of_index) if self.layer_of_index[i] == k)

    def label(self, i: int) -> str:
        return format_vector(self.basis[i - 1])

    def __hash__(self):
        return hash((self.layer_dims, self.table, self.basis))


def layer_complements(table: StructureTable) -> list[Subspace]:
    """Deterministic complements ``m_k`` of ``n^{k+1}`` in ``n^k``, k = 1..K."""
    chain = lower_central_series(table)
    if chain.last.dim:
        raise NotNilpotentError("associated graded algebra needs a nilpotent algebra")
    return [chain[k + 1].complement_in(chain[k]) for k in range(len(chain) - 1)]


def graded_basis(table: StructureTable) -> tuple[tuple[Vector, ...], dict[int, int]]:
    """Layer-complement basis sorted by pivot column, plus its layer map."""
    layers = layer_complements(table)
    tagged = []
    for k, m in enumerate(layers, start=1):
        for row, p in zip(m.rows, m.pivots):
            tagged.append((p, k, row))
    tagged.sort()
    # complements of a descending chain have disjoint pivots covering all columns
    assert [p for p, _, _ in tagged] == list(range(table.dim))
    return tuple(row for _, _, row in tagged), {p + 1: k for p, k, _ in tagged}


def associated_graded(table: StructureTable) -> GradedAlgebra:
    return _graded_cached(table)


@lru_cache(maxsize=256)
def _graded_cached(table: StructureTable) -> GradedAlgebra:
    n = table.dim
    basis, layer_of = graded_basis(table)
    depth = max(layer_of.values()) if layer_of else 0
    to_graded = linalg.inverse(linalg.transpose(basis))
    brackets = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            target = layer_of[a] + layer_of[b]
            if target > depth:
                continue
            coords = linalg.matvec(to_graded, table.bracket(basis[a - 1], basis[b - 1]))
            terms = {l: c for l, c in enumerate(coords, start=1) if c and layer_of[l] == target}
            if terms:
                brackets[(a, b)] = terms
    dims = tuple(sum(1 for v in layer_of.values() if v == k) for k in range(1, depth + 1))
    return GradedAlgebra(dims, StructureTable.from_brackets(n, brackets), layer_of, basis, table)


def graded_coordinates(graded: GradedAlgebra, v) -> Vector:
    """Coordinates of a source vector in the graded basis."""
    return linalg.matvec(_inverse_basis(graded), v)


@lru_cache(maxsize=256)
def _inverse_basis(graded: GradedAlgebra):
    return linalg.inverse(linalg.transpose(graded.basis))
