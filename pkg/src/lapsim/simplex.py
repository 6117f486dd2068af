"""The Laplacian simplex of a connected graph and its facet data.

The simplex is represented by its n x (n-1) vertex matrix: the Laplacian
expressed in the standard basis of the hyperplane orthogonal to the all-ones
vector, obtained as L times the upper triangular 0/1 change-of-basis matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm

from .errors import DomainError, ShapeError
from . import linalg
from .linalg import IntMatrix
from .graph import Graph, laplacian, spanning_tree_count


def basis_change_matrix(n: int) -> IntMatrix:
    """Upper triangular n x (n-1) matrix of ones on and above the diagonal."""
    return IntMatrix([[1 if i <= j else 0 for j in range(n - 1)] for i in range(n)])


@dataclass(frozen=True)
class FacetData:
    """One facet of the simplex, opposite vertex row ``opposite``.

    The facet hyperplane is {x : normal . x = local_index} with a primitive
    integer normal; ``dual_vertex`` is the corresponding vertex of the dual
    polytope, i.e. normal / local_index.
    """

    opposite: int
    dual_vertex: tuple
    normal: tuple
    local_index: int

    @property
    def is_lattice_vertex(self):
        return all(c.denominator == 1 for c in self.dual_vertex)


class LaplacianSimplex:
    """Convex hull of the rows of the reduced Laplacian of a graph."""

    def __init__(self, graph: Graph, vertex_matrix: IntMatrix, kappa: int):
        self.graph = graph
        self.vertex_matrix = vertex_matrix
        self.kappa = kappa
        self.n = vertex_matrix.nrows
        self.dim = vertex_matrix.ncols
        if self.dim != self.n - 1:
            raise ShapeError("vertex matrix must be n x (n-1)")

    @cached_property
    def lifted(self) -> IntMatrix:
        """The square matrix with rows (v_i, 1)."""
        return self.vertex_matrix.augment_column([1] * self.n)

    @cached_property
    def lifted_inverse_scaled(self):
        return linalg.inverse_scaled(self.lifted)

    @cached_property
    def volume(self) -> int:
        return normalized_volume(self)

    def __repr__(self):
        return f"LaplacianSimplex(n={self.n}, kappa={self.kappa})"


def build(G: Graph) -> LaplacianSimplex:
    """Construct the Laplacian simplex of a connected graph."""
    if G.n < 2:
        raise DomainError("Laplacian simplex needs n >= 2")
    L = laplacian(G)
    LB = L @ basis_change_matrix(G.n)
    assert all(sum(LB.col(j)) == 0 for j in range(LB.ncols))
    return LaplacianSimplex(G, LB, spanning_tree_count(G))


def normalized_volume(S: LaplacianSimplex) -> int:
    """|det [L_B | 1]|, which always equals n * kappa."""
    vol = abs(linalg.determinant(S.lifted))
    assert vol == S.n * S.kappa
    return vol


def barycentric_of_origin(vertex_matrix: IntMatrix):
    """Coefficients lam with lam . [M | 1] = (0,...,0,1); sums to 1."""
    n = vertex_matrix.nrows
    lifted = vertex_matrix.augment_column([1] * n)
    rhs = [0] * (n - 1) + [1]
    return linalg.solve_exact(lifted.transpose(), rhs)


def origin_in_interior(vertex_matrix: IntMatrix) -> bool:
    """True iff the origin is a strictly positive convex combination."""
    try:
        lam = barycentric_of_origin(vertex_matrix)
    except linalg.SingularMatrixError:
        return False
    return all(x > 0 for x in lam)


def contains_origin_interior(S: LaplacianSimplex) -> bool:
    return origin_in_interior(S.vertex_matrix)


def facets(S: LaplacianSimplex):
    """All n facets with exact dual vertices and primitive normals."""
    out = []
    ones = [1] * (S.n - 1)
    for i in range(S.n):
        sub = S.vertex_matrix.submatrix([i])
        dual = linalg.solve_exact(sub, ones)
        denom = lcm(*(c.denominator for c in dual))
        scaled = [int(c * denom) for c in dual]
        g = reduce(gcd, scaled, 0)
        normal = tuple(x // g for x in scaled)
        local_index = denom // g
        assert g * local_index == denom
        # sanity: the facet supports every vertex row except row i
        for j in range(S.n):
            val = sum(a * x for a, x in zip(normal, S.vertex_matrix.row(j)))
            assert val == local_index if j != i else val < local_index
        out.append(FacetData(i, tuple(dual), normal, local_index))
    return out


def is_reflexive(S: LaplacianSimplex) -> bool:
    """True iff the origin is interior and every dual vertex is integral."""
    if not contains_origin_interior(S):
        return False
    return all(f.is_lattice_vertex for f in facets(S))


def ell_reflexive_index(S: LaplacianSimplex):
    """The common facet local index ell, or None.

    Requires the origin strictly interior, every vertex row primitive, and
    all facet local indices equal.
    """
    if not contains_origin_interior(S):
        return None
    if not all(linalg.is_primitive(r) for r in S.vertex_matrix.rows):
        return None
    indices = {f.local_index for f in facets(S)}
    if len(indices) != 1:
        return None
    return indices.pop()


def cofactor_reflexivity_test(S: LaplacianSimplex) -> bool:
    """Reflexivity via divisibility of cofactor column sums.

    Independent of the dual-vertex solve: works purely with signed minors
    of each first minor of the vertex matrix.
    """
    kappa = S.kappa
    for i in range(S.n):
        B = S.vertex_matrix.submatrix([i])
        for j in range(S.dim):
            col_sum = sum(
                (-1) ** (k + j) * linalg.minor(B, [k], [j]) for k in range(S.dim)
            )
            if col_sum % kappa:
                return False
    return True


def _vertex_rows(obj) -> IntMatrix:
    if isinstance(obj, LaplacianSimplex):
        return obj.vertex_matrix
    if isinstance(obj, IntMatrix):
        return obj
    return IntMatrix(obj)


def verify_equivalence_certificate(S1, S2, U: IntMatrix, perm) -> bool:
    """Check that row perm(i) of S2 equals row i of S1 times unimodular U.

    ``perm`` maps 0-based row indices of S1 to row indices of S2.
    """
    M1, M2 = _vertex_rows(S1), _vertex_rows(S2)
    if M1.shape != M2.shape or U.shape != (M1.ncols, M1.ncols):
        raise ShapeError("incompatible shapes for equivalence certificate")
    if sorted(perm) != list(range(M1.nrows)):
        raise ShapeError("perm must be a permutation of the rows")
    if not linalg.is_unimodular(U):
        return False
    mapped = (IntMatrix(M1.rows) @ U).rows
    return all(mapped[i] == M2.rows[perm[i]] for i in range(M1.nrows))


def canonical_tree_simplex(d: int) -> IntMatrix:
    """Vertex matrix of the standard reflexive simplex conv(e_1..e_d, -1)."""
    if d < 1:
        raise DomainError("dimension must be >= 1")
    rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    rows.append([-1] * d)
    return IntMatrix(rows)
