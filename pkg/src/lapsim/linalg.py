"""Exact integer and rational linear algebra.

All matrix entries are Python ints (arbitrary precision) and all rational
results are `fractions.Fraction`, which normalizes to lowest terms with a
positive denominator automatically.  Nothing here ever touches floating
point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ShapeError, SingularMatrixError, DomainError


class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @staticmethod
    def identity(n):
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.transpose().rows
            return IntMatrix(
                [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows]
            )
        return NotImplemented

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def mul_row_vector(self, v):
        """Row vector times this matrix, exact (ints or Fractions)."""
        if len(v) != self.nrows:
            raise ShapeError("vector length does not match row count")
        return tuple(
            sum(v[i] * self.rows[i][j] for i in range(self.nrows))
            for j in range(self.ncols)
        )

    def submatrix(self, delete_rows=(), delete_cols=()):
        """Delete the given 0-based rows and columns."""
        dr, dc = set(delete_rows), set(delete_cols)
        rows = [
            [x for j, x in enumerate(r) if j not in dc]
            for i, r in enumerate(self.rows)
            if i not in dr
        ]
        return IntMatrix(rows)

    def augment_column(self, col):
        if len(col) != self.nrows:
            raise ShapeError("column length does not match row count")
        return IntMatrix([r + (int(c),) for r, c in zip(self.rows, col)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form U @ M @ V = D with unimodular U, V."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return tuple(self.D.rows[i][i] for i in range(min(self.D.shape)))


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square:
        raise ShapeError("determinant requires a square matrix")
    n = M.nrows
    a = [list(r) for r in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def minor(M: IntMatrix, delete_rows=(), delete_cols=()) -> int:
    """Determinant of the submatrix with the given 0-based rows/cols deleted."""
    return determinant(M.submatrix(delete_rows, delete_cols))


def solve_exact(M: IntMatrix, b):
    """Solve M x = b exactly; returns a tuple of Fractions.

    ``b`` may contain ints or Fractions.
    """
    if not M.is_square:
        raise ShapeError("solve requires a square matrix")
    n = M.nrows
    if len(b) != n:
        raise ShapeError("right-hand side length does not match")
    a = [[Fraction(x) for x in r] + [Fraction(b[i])] for i, r in enumerate(M.rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n + 1):
                    a[i][j] -= f * a[k][j]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = a[k][n] - sum(a[k][j] * x[j] for j in range(k + 1, n))
        x[k] = s / a[k][k]
    return tuple(x)


def inverse_scaled(M: IntMatrix):
    """Return (A, s) with integer A and M @ A == s * I, s = det(M)."""
    if not M.is_square:
        raise ShapeError("inverse requires a square matrix")
    s = determinant(M)
    if s == 0:
        raise SingularMatrixError("matrix is singular")
    n = M.nrows
    cols = []
    for j in range(n):
        e = [s if i == j else 0 for i in range(n)]
        col = solve_exact(M, e)
        assert all(x.denominator == 1 for x in col)
        cols.append([int(x) for x in col])
    return IntMatrix(zip(*cols)), s


def is_unimodular(M: IntMatrix) -> bool:
    """True iff M is square with |det M| = 1."""
    if not M.is_square:
        raise ShapeError("unimodularity requires a square matrix")
    return abs(determinant(M)) == 1


def is_primitive(v) -> bool:
    """True iff the nonzero integer vector has entry gcd 1."""
    v = tuple(int(x) for x in v)
    if all(x == 0 for x in v):
        raise DomainError("zero vector has no primitivity")
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def _snf_pivot(a, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Smith normal form with smallest-pivot elimination.

    Returns U, D, V with U @ M @ V = D, U and V unimodular, D diagonal
    with nonnegative entries in a divisibility chain.
    """
    m, n = M.shape
    a = [list(r) for r in M.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, k, f):  # row i -= f * row k
        a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        u[i] = [x - f * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, f):  # col j -= f * col k
        for r in a:
            r[j] -= f * r[k]
        for r in v:
            r[j] -= f * r[k]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    t = 0
    while t < min(m, n):
        piv = _snf_pivot(a, t, m, n)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
                    if a[i][t]:  # remainder smaller than pivot: swap up and redo
                        swap_rows(t, i)
                    done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        swap_cols(t, j)
                    done = False
            if done:
                break
        # enforce that the pivot divides every remaining entry
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # fold the offending row in and re-reduce
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    U, D, V = IntMatrix(u), IntMatrix(a), IntMatrix(v)
    assert U @ M @ V == D
    return SnfResult(U, D, V)


def determinant_by_cofactors(M: IntMatrix) -> int:
    """Laplace expansion along the first row; independent test oracle."""
    if not M.is_square:
        raise ShapeError("determinant requires a square matrix")
    n = M.nrows
    if n == 1:
        return M.rows[0][0]
    total = 0
    for j in range(n):
        if M.rows[0][j]:
            total += (-1) ** j * M.rows[0][j] * determinant_by_cofactors(
                M.submatrix([0], [j])
            )
    return total
