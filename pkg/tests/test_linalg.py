import random

import pytest

from tgrs.gf import FieldError, field
from tgrs.linalg import (MatrixGF, mat_mul, nullspace, rank, row_space_equal,
                         rref, transpose, vec_mat)


def test_rref_identity():
    f5 = field(5)
    eye = MatrixGF.identity(f5, 3)
    red, rk, pivots = rref(eye)
    assert red == eye and rk == 3 and pivots == [0, 1, 2]


def test_rref_dependent_rows():
    f5 = field(5)
    m = MatrixGF.from_rows(f5, [[1, 2], [2, 4]])
    _, rk, _ = rref(m)
    assert rk == 1


def test_rref_vandermonde_full_rank():
    f5 = field(5)
    alpha = [1, 2, 3]
    m = MatrixGF.from_rows(f5, [[f5.pow(a, e) for a in alpha] for e in range(3)])
    assert rank(m) == 3


def test_nullspace_full_rank_square():
    f7 = field(7)
    m = MatrixGF.from_rows(f7, [[1, 2], [3, 5]])
    assert nullspace(m).rows == 0


def test_nullspace_parity_row():
    f2 = field(2)
    m = MatrixGF.from_rows(f2, [[1, 1, 1]])
    ns = nullspace(m)
    assert ns.rows == 2
    assert mat_mul(m, transpose(ns)).is_zero()


def test_nullspace_rs_code():
    f5 = field(5)
    g = MatrixGF.from_rows(f5, [[1, 1, 1, 1], [0, 1, 2, 3]])
    ns = nullspace(g)
    assert ns.rows == 2
    assert mat_mul(g, transpose(ns)).is_zero()


def test_row_space_invariances():
    f5 = field(5)
    a = MatrixGF.from_rows(f5, [[1, 2, 3], [0, 1, 4]])
    permuted = MatrixGF.from_rows(f5, [[0, 1, 4], [1, 2, 3]])
    scaled = MatrixGF.from_rows(f5, [[2, 4, 1], [0, 1, 4]])
    assert row_space_equal(a, permuted)
    assert row_space_equal(a, scaled)
    other = MatrixGF.from_rows(f5, [[1, 2, 3], [0, 1, 3]])
    assert not row_space_equal(a, other)


def test_double_dual_identity():
    f7 = field(7)
    g = MatrixGF.from_rows(f7, [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]])
    assert row_space_equal(g, nullspace(nullspace(g)))


def test_mat_mul_identities():
    f9 = field(3, 2)
    random.seed(0)
    a = MatrixGF.from_rows(f9, [[random.randrange(9) for _ in range(4)] for _ in range(3)])
    eye = MatrixGF.identity(f9, 4)
    assert mat_mul(a, eye) == a
    assert transpose(transpose(a)) == a


def test_dimension_and_context_errors():
    f5, f7 = field(5), field(7)
    a = MatrixGF.from_rows(f5, [[1, 2]])
    b = MatrixGF.from_rows(f5, [[1, 2]])
    with pytest.raises(ValueError):
        mat_mul(a, b)
    c = MatrixGF.from_rows(f7, [[1], [2]])
    with pytest.raises(FieldError):
        mat_mul(a, c)
    with pytest.raises(ValueError):
        row_space_equal(a, MatrixGF.from_rows(f5, [[1, 2, 3]]))


def test_vec_mat():
    f5 = field(5)
    g = MatrixGF.from_rows(f5, [[1, 1, 1], [0, 1, 2]])
    assert vec_mat([1, 1], g) == [1, 2, 3]
    with pytest.raises(ValueError):
        vec_mat([1], g)


@pytest.mark.parametrize("q,p,m", [(5, 5, 1), (7, 7, 1), (9, 3, 2), (16, 2, 4)])
def test_rank_equals_rank_of_transpose(q, p, m):
    ctx = field(p, m)
    rng = random.Random(q)
    for _ in range(15):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        mat = MatrixGF.from_rows(
            ctx, [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)]
        )
        assert rank(mat) == rank(transpose(mat))


def test_nullspace_rank_nullity():
    ctx = field(3, 2)
    rng = random.Random(5)
    for _ in range(20):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        mat = MatrixGF.from_rows(
            ctx, [[rng.randrange(9) for _ in range(cols)] for _ in range(rows)]
        )
        ns = nullspace(mat)
        assert rank(mat) + ns.rows == cols
        if ns.rows:
            assert mat_mul(mat, transpose(ns)).is_zero()
