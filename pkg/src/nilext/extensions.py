"""Adapted bases, block views of derivations and bounds on solvable extensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .derivations import _require_derivation
from .errors import DimensionError, NoLayersError, NotNilpotentError
from .liecore import StructureTable
from .linalg import Matrix, Vector
from .series import center, lower_central_series, lower_term


@dataclass(frozen=True)
class AdaptedBasis:
    """Basis of n built from layer complements ``m_1, ..., m_K``.

    ``vectors[i]`` is adapted basis vector ``e_{i+1}`` in original coordinates.
    Layer ``k`` occupies the positions of the pivot columns of ``n^k`` that
    are not pivots of ``n^{k+1}``, so algebras already written in an adapted
    basis keep their labels.  ``witnesses[j] = (a, b)`` means
    ``e_j = [e_a, e_b]`` exactly, with one of ``a, b`` in layer ``k-1`` and
    the other in layer 1.
    """

    vectors: tuple[Vector, ...]
    layer_dims: tuple[int, ...]
    layer_of_index: dict
    witnesses: dict

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def change_of_basis(self) -> Matrix:
        """Maps original coordinates to adapted coordinates."""
        return _inverse(self.vectors)

    def layer_indices(self, k: int) -> tuple[int, ...]:
        return tuple(i for i in sorted(self.layer_of_index) if self.layer_of_index[i] == k)

    def to_adapted(self, v: Sequence[Fraction]) -> Vector:
        return linalg.matvec(self.change_of_basis, v)

    def __hash__(self):
        return hash(self.vectors)


@lru_cache(maxsize=256)
def _inverse(vectors: tuple[Vector, ...]) -> Matrix:
    return linalg.inverse(linalg.transpose(vectors))


def adapted_basis(table: StructureTable) -> AdaptedBasis:
    return _adapted_cached(table)


@lru_cache(maxsize=256)
def _adapted_cached(table: StructureTable) -> AdaptedBasis:
    n = table.dim
    chain = lower_central_series(table)
    if chain.last.dim:
        raise NotNilpotentError("adapted bases need a nilpotent algebra")
    if table.is_abelian:
        raise NoLayersError("abelian algebra has a single layer and no brackets to witness")
    depth = len(chain) - 1
    slots = [
        [p for p in chain[k].pivots if p not in set(chain[k + 1].pivots)] for k in range(depth)
    ]
    vectors: list = [None] * n
    layer_of: dict[int, int] = {}
    witnesses: dict[int, tuple[int, int]] = {}

    m1 = chain[1].complement_in(chain[0])
    for p, row in zip(slots[0], m1.rows):
        vectors[p] = row
        layer_of[p + 1] = 1
    layer1 = [p + 1 for p in slots[0]]
    previous = layer1
    for k in range(2, depth + 1):
        below = chain[k]
        chosen: list[Vector] = []
        classes: list[Vector] = []
        for y in previous:
            for z in layer1:
                if len(chosen) == len(slots[k - 1]):
                    break
                v = table.bracket(vectors[y - 1], vectors[z - 1])
                cls = below.reduce(v)
                if linalg.rank(classes + [cls]) == len(classes) + 1:
                    lead = next(c for c in cls if c)
                    if lead > 0:
                        pair = (y, z)
                    else:
                        pair, v = (z, y), tuple(-x for x in v)
                        cls = tuple(-x for x in cls)
                    p = slots[k - 1][len(chosen)]
                    chosen.append(v)
                    classes.append(cls)
                    vectors[p] = v
                    layer_of[p + 1] = k
                    witnesses[p + 1] = pair
        if len(chosen) != len(slots[k - 1]):
            # n^k = [m_{k-1}, m_1] + n^{k+1} makes this unreachable
            raise AssertionError(f"layer {k} could not be filled from brackets")
        previous = [p + 1 for p in slots[k - 1]]
    dims = tuple(len(s) for s in slots)
    return AdaptedBasis(tuple(tuple(v) for v in vectors), dims, layer_of, witnesses)


def check_witnesses(table: StructureTable, basis: AdaptedBasis) -> list[int]:
    """Adapted indices whose witness does not reproduce the basis vector."""
    bad = []
    for j, (a, b) in sorted(basis.witnesses.items()):
        if table.bracket(basis.vectors[a - 1], basis.vectors[b - 1]) != basis.vectors[j - 1]:
            bad.append(j)
    return bad


@dataclass(frozen=True)
class BlockView:
    """A derivation in adapted coordinates, cut into layer blocks.

    ``blocks[(r, c)]`` is the part mapping layer ``c`` into layer ``r``.
    """

    derivation: Matrix
    blocks: dict
    layer_dims: tuple[int, ...]

    def nonzero_blocks(self) -> list[tuple[int, int]]:
        return [rc for rc, b in self.blocks.items() if not linalg.is_zero_matrix(b)]

    @property
    def is_upper_block_triangular(self) -> bool:
        """With layers ordered ``m_K, ..., m_1``: nothing maps a layer into a lower one."""
        return all(r >= c for r, c in self.nonzero_blocks())

    @property
    def is_strictly_upper(self) -> bool:
        return all(r > c for r, c in self.nonzero_blocks())


def block_view(table: StructureTable, basis: AdaptedBasis, d: Sequence[Sequence[Fraction]]) -> BlockView:
    if len(d) != basis.dim:
        raise DimensionError(f"{len(d)}-dimensional matrix for a {basis.dim}-dimensional basis")
    b = linalg.transpose(basis.vectors)
    adapted = linalg.matmul(basis.change_of_basis, linalg.matmul(d, b))
    depth = len(basis.layer_dims)
    idx = {k: [i - 1 for i in basis.layer_indices(k)] for k in range(1, depth + 1)}
    blocks = {
        (r, c): linalg.submatrix(adapted, idx[r], idx[c])
        for r in range(1, depth + 1)
        for c in range(1, depth + 1)
    }
    return BlockView(adapted, blocks, basis.layer_dims)


def m1_block(table: StructureTable, basis: AdaptedBasis, d: Sequence[Sequence[Fraction]]) -> Matrix:
    return block_view(table, basis, d).blocks[(1, 1)]


def solvable_extension_bound(table: StructureTable) -> int:
    """Largest possible number of nilindependent derivations: ``dim n - dim n^2``."""
    if lower_central_series(table).last.dim:
        raise NotNilpotentError("the bound is defined for nilpotent algebras")
    return table.dim - lower_term(table, 2).dim


def is_heisenberg(table: StructureTable) -> bool:
    """Odd dimension, one-dimensional derived algebra equal to the center, nondegenerate form."""
    n2 = lower_term(table, 2)
    return table.dim % 2 == 1 and table.dim >= 3 and n2.dim == 1 and center(table) == n2


def bound_annotations(table: StructureTable) -> list[str]:
    notes = []
    if is_heisenberg(table):
        bound = solvable_extension_bound(table)
        attained = (table.dim + 1) // 2
        status = "saturated" if bound == attained else "not saturated"
        notes.append(
            f"Heisenberg nilradical: the attained maximum is (dim h + 1)/2 = {attained}; bound {bound} is {status}"
        )
    return notes


def nilradical_lower_bound(dim_s: int, dim_s_derived2: int) -> Fraction:
    """``(dim s + dim s^(2)) / 2``, a lower bound for the nilradical of a solvable ``s``."""
    if dim_s < 1 or dim_s_derived2 < 0:
        raise DimensionError("dimensions must be positive (dim s) and non-negative (dim s^(2))")
    if dim_s_derived2 > dim_s:
        raise DimensionError("second derived algebra cannot exceed the algebra")
    return Fraction(dim_s + dim_s_derived2, 2)


def m1_block_commutation(
    table: StructureTable, basis: AdaptedBasis, ds: Sequence[Sequence[Sequence[Fraction]]]
) -> tuple[bool, tuple[int, int] | None]:
    """Do the induced maps on ``n/n^2`` commute pairwise?  Returns the first failing pair."""
    for d in ds:
        _require_derivation(table, d)
    blocks = [m1_block(table, basis, d) for d in ds]
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if not linalg.is_zero_matrix(linalg.commutator(blocks[i], blocks[j])):
                return False, (i, j)
    return True, None
