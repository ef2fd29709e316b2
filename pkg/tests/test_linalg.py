from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bstar import (GF, GF2, GF3, QQ, CoefficientField, Matrix, ShapeError,
                   kernel_basis, rank, rref, span_contains, span_dim)
from bstar.linalg import _rref_dense, _rref_sparse, product_is_zero

from oracles import oracle_rank

# Signed vertex-edge incidence of the triangle boundary (edges 12, 13, 23).
TRIANGLE_D1 = Matrix.from_rows([
    [-1, -1, 0],
    [1, 0, -1],
    [0, 1, 1],
])

int_matrices = st.lists(
    st.lists(st.integers(-4, 4), min_size=1, max_size=6),
    min_size=1, max_size=6,
).filter(lambda rows: len({len(r) for r in rows}) == 1).map(Matrix.from_rows)


def test_field_construction_and_interning():
    assert CoefficientField.prime(2) is GF2
    assert CoefficientField.rationals() is QQ
    assert GF(5).label == "F5"
    assert QQ.label == "Q"
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)


def test_field_conversion():
    assert QQ.convert(3) == Fraction(3)
    assert GF3.convert(-1) == 2
    assert GF3.convert(Fraction(1, 2)) == 2  # 1/2 = 2 in F_3
    with pytest.raises(ZeroDivisionError):
        GF2.convert(Fraction(1, 2))


def test_rank_identity_and_scalars():
    for n in (1, 3, 5):
        assert rank(Matrix.identity(n), QQ) == n
        assert rank(Matrix.identity(n), GF2) == n
    two = Matrix.from_rows([[2]])
    assert rank(two, QQ) == 1
    assert rank(two, GF2) == 0
    assert rank(two, GF3) == 1


def test_rank_of_triangle_boundary_matrix():
    # hand elimination gives 2; the F_2 reduction also has rank 2
    assert rank(TRIANGLE_D1, QQ) == 2
    assert rank(TRIANGLE_D1, GF2) == 2
    assert oracle_rank(TRIANGLE_D1.to_rows()) == 2
    assert oracle_rank(TRIANGLE_D1.to_rows(), 2) == 2


def test_kernel_of_zero_and_injective():
    assert kernel_basis(Matrix.zero(4, 4), QQ).ncols == 4
    inj = Matrix.from_rows([[1, 0], [0, 1], [3, 5]])
    assert kernel_basis(inj, QQ).ncols == 0


def test_kernel_of_triangle_boundary():
    k = kernel_basis(TRIANGLE_D1, QQ)
    assert k.ncols == 1
    assert product_is_zero(TRIANGLE_D1, k, QQ)
    fundamental = [abs(v) for v in k.column(0)]
    assert fundamental == [1, 1, 1]


def test_span_dim_and_contains():
    vs = Matrix.from_rows([[1, 1], [0, 1], [0, 0]])  # e1, e1+e2
    assert span_dim(vs, QQ) == 2
    e1_only = Matrix.from_rows([[1], [0], [0]])
    assert not span_contains(e1_only, [0, 1, 0], QQ)
    assert span_contains(e1_only, [5, 0, 0], QQ)
    # three dependent vectors in a rank-2 configuration: the triangle boundary
    assert span_dim(TRIANGLE_D1, QQ) == 2
    with pytest.raises(ShapeError):
        span_contains(e1_only, [1, 0], QQ)


@given(int_matrices)
def test_rank_equals_transpose_rank(m):
    for f in (QQ, GF2, GF3):
        assert rank(m, f) == rank(m.transpose(), f)


@given(int_matrices)
def test_rank_matches_sympy(m):
    assert rank(m, QQ) == oracle_rank(m.to_rows())
    assert rank(m, GF2) == oracle_rank(m.to_rows(), 2)
    assert rank(m, GF3) == oracle_rank(m.to_rows(), 3)


@given(int_matrices)
def test_prime_rank_bounded_by_rational_rank(m):
    rq = rank(m, QQ)
    assert rank(m, GF2) <= rq
    assert rank(m, GF3) <= rq


@given(int_matrices)
def test_rank_nullity_and_kernel_annihilation(m):
    for f in (QQ, GF3):
        k = kernel_basis(m, f)
        assert rank(m, f) + k.ncols == m.ncols
        assert product_is_zero(m, k, f)


@given(int_matrices)
def test_dense_and_sparse_paths_agree(m):
    for f in (QQ, GF2):
        pd, rd = _rref_dense(m, f)
        ps, rs = _rref_sparse(m, f)
        assert pd == ps
        assert rd == rs


def test_rank_deterministic():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    results = {rank(m, QQ) for _ in range(5)}
    assert results == {2}


def test_representation_selection():
    dense = Matrix.from_rows([[1, 2], [3, 4]])
    assert dense.representation == "dense"
    sparse = Matrix(10, 10, {(0, 0): 1})
    assert sparse.representation == "sparse"
    # rank agrees regardless of which path the density picks
    assert rank(sparse, QQ) == 1


def test_rref_is_canonical():
    m = Matrix.from_rows([[2, 4], [1, 2]])
    pivots, r = rref(m, QQ)
    assert pivots == [0]
    assert r.to_rows() == [[1, 2], [0, 0]]


def test_matmul_and_shape_errors():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[1], [1]])
    assert a.matmul(b).to_rows() == [[3], [7]]
    with pytest.raises(ShapeError):
        b.matmul(a)


def test_exact_rank_of_hilbert_like_matrix():
    # badly conditioned for floats; exact arithmetic sees full rank
    n = 6
    hilbert = Matrix.from_rows(
        [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    assert rank(hilbert, QQ) == n
    k = kernel_basis(hilbert, QQ)
    assert k.ncols == 0
