"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Large, sparse
systems (the Leibniz equations for derivations) go through
:func:`sparse_nullspace`, which keeps rows as ``{column: value}`` dicts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[ZERO] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def unit(n: int, i: int) -> Vector:
    """Standard basis vector with a one at 0-based position ``i``."""
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a)


def matsub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def commutator(a, b) -> Matrix:
    return matsub(matmul(a, b), matmul(b, a))


def is_zero_matrix(m: Sequence[Sequence[Fraction]]) -> bool:
    return all(not x for row in m for x in row)


def flatten(m: Sequence[Sequence[Fraction]]) -> Vector:
    return tuple(x for row in m for x in row)


def submatrix(m, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[m[i][j] for j in cols] for i in rows]


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns the nonzero rows and pivot columns."""
    m = as_matrix(rows)
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(m: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : m x = 0}``, one vector per free column in increasing order."""
    reduced, pivots = rref(m, ncols) if m else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def sparse_nullspace(equations: Iterable[dict[int, Fraction]], nvars: int) -> list[Vector]:
    """Nullspace of a sparse homogeneous system.

    Each equation is a dict mapping variable index to coefficient.  The basis
    is returned in the same order as :func:`nullspace` (one vector per free
    variable, increasing).
    """
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for eq in equations:
        row = {k: frac(v) for k, v in eq.items() if v}
        # reduce against existing pivots until the leading term is new
        while row:
            lead = min(row)
            prow = pivot_rows.get(lead)
            if prow is None:
                break
            f = row[lead]
            for k, v in prow.items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        pivot_rows[lead] = {k: v * inv for k, v in row.items()}
    # back substitution to full RREF, highest pivot first
    for p in sorted(pivot_rows, reverse=True):
        prow = pivot_rows[p]
        for q, qrow in pivot_rows.items():
            if q < p and p in qrow:
                f = qrow[p]
                for k, v in prow.items():
                    nv = qrow.get(k, ZERO) - f * v
                    if nv:
                        qrow[k] = nv
                    else:
                        qrow.pop(k, None)
    basis = []
    for f in range(nvars):
        if f in pivot_rows:
            continue
        v = [ZERO] * nvars
        v[f] = ONE
        for p, prow in pivot_rows.items():
            c = prow.get(f)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [frac(bi)] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(as_matrix(m), identity(n))]
    reduced, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in reduced]


def matpow(m: Sequence[Sequence[Fraction]], k: int) -> Matrix:
    result = identity(len(m))
    base = as_matrix(m)
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def is_nilpotent_matrix(m: Sequence[Sequence[Fraction]]) -> bool:
    n = len(m)
    return n == 0 or is_zero_matrix(matpow(m, n))


def generates_nilpotent_algebra(mats: Sequence[Sequence[Sequence[Fraction]]], n: int) -> bool:
    """True iff the associative algebra generated by ``mats`` is nilpotent.

    Then every linear combination of ``mats`` is nilpotent; when ``mats`` span
    a Lie algebra the converse holds too (Engel).  Checked by pushing
    the whole space through the generators until it dies or stabilizes.
    """
    space, _ = rref([list(unit(n, i)) for i in range(n)], n)
    for _ in range(n + 1):
        if not space:
            return True
        images = [list(matvec(m, v)) for m in mats for v in space]
        new, _ = rref(images, n) if images else ([], [])
        if len(new) == len(space):
            return False
        space = new
    return not space
