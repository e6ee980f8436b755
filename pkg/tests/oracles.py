"""Reference computations that share no code with the package.

Everything here works on a dense structure tensor built straight from the
stored table entries and uses sympy for ranks and nullspaces.
"""

from fractions import Fraction
from itertools import combinations

import sympy


def tensor(table):
    """``N[j][k][l]`` with 0-based indices, antisymmetric in j, k."""
    n = table.dim
    N = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (j, k), terms in table.entries:
        for l, c in terms:
            N[j - 1][k - 1][l - 1] = Fraction(c)
            N[k - 1][j - 1][l - 1] = -Fraction(c)
    return N


def bracket(N, x, y):
    n = len(N)
    out = [Fraction(0)] * n
    for j in range(n):
        if not x[j]:
            continue
        for k in range(n):
            if not y[k]:
                continue
            c = x[j] * y[k]
            for l in range(n):
                out[l] += c * N[j][k][l]
    return out


def unit(n, i):
    return [Fraction(int(a == i)) for a in range(n)]


def jacobi_defects(table):
    """{(j, k, l): defect} over 1-based triples j < k < l with a nonzero defect."""
    N = tensor(table)
    n = table.dim
    out = {}
    for j, k, l in combinations(range(n), 3):
        x, y, z = unit(n, j), unit(n, k), unit(n, l)
        d = [
            a + b + c
            for a, b, c in zip(bracket(N, x, bracket(N, y, z)), bracket(N, y, bracket(N, z, x)), bracket(N, z, bracket(N, x, y)))
        ]
        if any(d):
            out[(j + 1, k + 1, l + 1)] = tuple(d)
    return out


def rank(vectors):
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in v] for v in vectors]).rank()


def span_contains(big, small):
    return rank(list(big) + list(small)) == rank(big)


def lower_central_dims(table):
    N = tensor(table)
    n = table.dim
    current = [unit(n, i) for i in range(n)]
    dims = [n]
    while True:
        images = [bracket(N, x, unit(n, i)) for x in current for i in range(n)]
        r = rank(images)
        if r == dims[-1]:
            return dims
        m = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in v] for v in images]) if images else None
        current = [[Fraction(int(c.p), int(c.q)) for c in row] for row in m.rref()[0].tolist()[:r]] if r else []
        dims.append(r)
        if r == 0:
            return dims


def derivation_dim(table):
    """Dimension of der(g) from a sympy nullspace of the Leibniz system."""
    N = tensor(table)
    n = table.dim
    D = sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"d_{i}_{j}"))
    unknowns = list(D)
    eqs = []
    for j in range(n):
        for k in range(j + 1, n):
            for l in range(n):
                lhs = sum(N[j][k][m] * D[l, m] for m in range(n))
                rhs = sum(D[i, j] * N[i][k][l] for i in range(n)) + sum(D[i, k] * N[j][i][l] for i in range(n))
                e = sympy.nsimplify(lhs - rhs)
                if e != 0:
                    eqs.append(e)
    if not eqs:
        return n * n
    A, _ = sympy.linear_eq_to_matrix(eqs, unknowns)
    return n * n - A.rank()


def center_dim(table):
    N = tensor(table)
    n = table.dim
    rows = [[N[i][k][l] for i in range(n)] for k in range(n) for l in range(n)]
    return n - rank(rows)


def mutate(table, j, k, l, delta=1):
    """Add ``delta`` to N_jk^l (j < k) and return a new entry dict."""
    entries = {pair: dict(terms) for pair, terms in table.entries}
    terms = entries.setdefault((j, k), {})
    terms[l] = terms.get(l, Fraction(0)) + delta
    if not terms[l]:
        del terms[l]
    return {pair: t for pair, t in entries.items() if t}
