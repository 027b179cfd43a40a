from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbmfd.exact_linalg import (
    RationalMatrix,
    nullspace_basis,
    primitive_integer_vector,
    rank,
    solve_linear,
)


def M(rows, cols=None):
    return RationalMatrix.from_rows(rows, cols=cols)


class TestRank:
    def test_identity(self):
        assert rank(M([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3

    def test_zero(self):
        assert rank(M([[0, 0], [0, 0]])) == 0

    def test_proportional_rows(self):
        assert rank(M([[1, 2], [2, 4], [3, 6]])) == 1

    def test_empty(self):
        assert rank(RationalMatrix(0, 5, ())) == 0
        assert rank(RationalMatrix(3, 0, ())) == 0

    def test_fractional_entries(self):
        # second row is 3x the first: singular even though no integer row repeats
        m = M([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
        assert rank(m) == 1
        assert rank(M([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]])) == 2

    def test_rank_of_known_deficient(self):
        # rows 3 = rows 1 + rows 2
        m = M([[1, 2, 3], [4, 5, 6], [5, 7, 9]])
        assert rank(m) == 2


class TestNullspace:
    def test_one_by_two(self):
        assert nullspace_basis(M([[1, -1]])) == [(1, 1)]

    def test_one_by_three_oracle(self):
        m = M([[1, 2, 3]])
        basis = nullspace_basis(m)
        assert len(basis) == 2
        for v in basis:
            assert 1 * v[0] + 2 * v[1] + 3 * v[2] == 0

    def test_primitive_normalization(self):
        basis = nullspace_basis(M([[2, 4]]))
        assert basis == [(2, -1)]

    def test_full_rank_square(self):
        assert nullspace_basis(M([[1, 0], [0, 1]])) == []

    def test_zero_rows_matrix(self):
        basis = nullspace_basis(RationalMatrix(0, 3, ()))
        assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


class TestSolve:
    def test_unique(self):
        m = M([[1, 1], [1, -1]])
        x = solve_linear(m, [3, 1])
        assert x == (Fraction(2), Fraction(1))

    def test_inconsistent(self):
        m = M([[1, 1], [2, 2]])
        assert solve_linear(m, [1, 3]) is None

    def test_underdetermined_picks_valid_solution(self):
        m = M([[1, 2, 3]])
        x = solve_linear(m, [6])
        assert sum(Fraction(c) * xi for c, xi in zip((1, 2, 3), x)) == 6


def test_primitive_integer_vector_sign_and_content():
    assert primitive_integer_vector([Fraction(-2), Fraction(4), Fraction(0)]) == (1, -2, 0)
    assert primitive_integer_vector([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    with pytest.raises(ValueError):
        primitive_integer_vector([0, 0])


entry = st.integers(min_value=-30, max_value=30)


@st.composite
def small_matrix(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = [[draw(entry) for _ in range(cols)] for _ in range(rows)]
    return M(data)


@given(small_matrix())
@settings(max_examples=120, deadline=None)
def test_rank_transpose_invariant(m):
    assert rank(m) == rank(m.transpose())


@given(small_matrix())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(m):
    assert rank(m) + len(nullspace_basis(m)) == m.cols


@given(small_matrix())
@settings(max_examples=120, deadline=None)
def test_kernel_vectors_annihilate(m):
    for v in nullspace_basis(m):
        assert all(x == 0 for x in m.mul_vector(v))
        # primitive form: coprime entries, first nonzero positive
        from math import gcd

        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1
        assert next(x for x in v if x != 0) > 0


@given(small_matrix(), st.integers(min_value=-5, max_value=5))
@settings(max_examples=60, deadline=None)
def test_rank_invariant_under_row_scaling(m, s):
    if s == 0:
        s = 7
    rows = m.row_list()
    rows[0] = [s * x for x in rows[0]]
    assert rank(M(rows)) == rank(m)
