from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgepair.linalg import (
    DimensionError,
    GramError,
    InnerProductSpace,
    RatMatrix,
    Subspace,
    adjoint_matrix,
    as_rational,
    format_rational,
    orthocomplement,
    orthogonal,
    rref,
    solve,
    subspace_sum_intersect,
)

F = Fraction


def vectors(n, count):
    return st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=0, max_size=count)


@st.composite
def subspace_pairs(draw):
    n = draw(st.integers(1, 5))
    return n, Subspace.span(draw(vectors(n, 4)), n), Subspace.span(draw(vectors(n, 4)), n)


@st.composite
def grams(draw, n):
    a = RatMatrix.from_rows(draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                                          min_size=n, max_size=n)), n)
    return InnerProductSpace(n, a.T @ a + RatMatrix.identity(n))


def test_rational_round_trip():
    assert as_rational("3/6") == F(1, 2)
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(F(-1, 3)) == "-1/3"


def test_rref_proportional_rows():
    red, rank, piv = rref(RatMatrix.from_rows([[1, 2], [2, 4]]))
    assert rank == 1 and piv == (0,)
    assert red.data[0] == (1, 2)


def test_rref_identity_and_zero():
    i3 = RatMatrix.identity(3)
    assert rref(i3) == (i3, 3, (0, 1, 2))
    _, rank, piv = rref(RatMatrix.zeros(2, 2))
    assert rank == 0 and piv == ()


def test_sum_intersect_examples():
    e1 = Subspace.span([[1, 0]], 2)
    e2 = Subspace.span([[0, 1]], 2)
    s, m = subspace_sum_intersect(e1, e2)
    assert s.dim == 2 and m.dim == 0
    assert subspace_sum_intersect(e1, e1) == (e1, e1)
    # Hand solution: a(1,1,0) + b(0,0,1) = c(1,1,1) forces a = b = c.
    a = Subspace.span([[1, 1, 0], [0, 0, 1]], 3)
    b = Subspace.span([[1, 1, 1]], 3)
    s, m = subspace_sum_intersect(a, b)
    assert m == b and s.dim == 2


def test_sum_intersect_rejects_mismatch():
    with pytest.raises(DimensionError):
        subspace_sum_intersect(Subspace.full(2), Subspace.full(3))


def test_orthocomplement_examples():
    e = InnerProductSpace.euclidean(2)
    assert orthocomplement(Subspace.span([[1, 1]], 2), e) == Subspace.span([[1, -1]], 2)
    assert orthocomplement(Subspace.full(2), e).is_zero()
    weighted = InnerProductSpace.diagonal([1, 2])
    assert orthocomplement(Subspace.span([[1, 0]], 2), weighted) == Subspace.span([[0, 1]], 2)


def test_adjoint_matrix_examples():
    e1, e2 = InnerProductSpace.euclidean(1), InnerProductSpace.euclidean(2)
    a = RatMatrix.from_rows([[-1, 1]])
    assert adjoint_matrix(a, e2, e1) == a.T
    g = InnerProductSpace(2, RatMatrix.from_rows([[2, 1], [1, 3]]))
    assert adjoint_matrix(RatMatrix.identity(2), g, g) == RatMatrix.identity(2)


def test_gram_must_be_positive_definite():
    with pytest.raises(GramError):
        InnerProductSpace(2, RatMatrix.from_rows([[1, 2], [2, 1]]))
    with pytest.raises(GramError):
        InnerProductSpace(2, RatMatrix.from_rows([[1, 1], [0, 1]]))


def test_solve():
    m = RatMatrix.from_rows([[1, 1], [0, 2]])
    assert solve(m, (F(3), F(4))) == (1, 2)
    assert solve(RatMatrix.from_rows([[1], [1]]), (F(1), F(2))) is None


@given(vectors(4, 4), st.permutations(range(4)))
def test_canonical_basis_independent_of_spanning_set(rows, perm):
    shuffled = [rows[i] for i in perm if i < len(rows)]
    doubled = shuffled + [[2 * x for x in r] for r in rows]
    assert Subspace.span(rows, 4).basis == Subspace.span(doubled, 4).basis


@given(subspace_pairs())
def test_dimension_formula(pair):
    _, a, b = pair
    s, m = subspace_sum_intersect(a, b)
    assert s.dim + m.dim == a.dim + b.dim
    assert m <= a and m <= b and a <= s and b <= s


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(grams(n), vectors(n, 3))))
def test_double_orthocomplement(args):
    space, rows = args
    s = Subspace.span(rows, space.dim)
    perp = orthocomplement(s, space)
    assert s.dim + perp.dim == space.dim
    assert orthogonal(s, perp, space)
    assert orthocomplement(perp, space) == s


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_adjoint_matrix_pairing_and_involution(n, m, data):
    src, dst = data.draw(grams(n)), data.draw(grams(m))
    a = RatMatrix.from_rows(data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                               min_size=m, max_size=m)), n)
    star = adjoint_matrix(a, src, dst)
    assert adjoint_matrix(star, dst, src) == a
    for u in RatMatrix.identity(n).data:
        for v in RatMatrix.identity(m).data:
            assert dst.inner(a.apply(u), v) == src.inner(u, star.apply(v))
