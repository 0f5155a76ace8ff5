import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgepair.complexes import betti
from hodgepair.generate import random_simplicial, rng_for
from hodgepair.linalg import RatMatrix, Subspace, rref
from hodgepair.simplicial import (
    MeshError,
    _integer_rank,
    boundary_subcomplex,
    build_complex,
    cochain_pair,
    coboundary_matrix,
    cone,
    explicit_boundary,
    fixture,
    load_complex,
    reference_cohomology,
)


def test_load_examples():
    k = load_complex({"simplices": [[0, 1], [1, 2]]})
    assert (k.vertex_count, k.count(1)) == (3, 2)
    k = load_complex({"simplices": [[0, 1], [1, 2], [0, 2]]})
    assert (k.count(0), k.count(1), k.dim) == (3, 3, 1)
    k = load_complex({"simplices": [[0, 1, 2]]})
    assert (k.count(0), k.count(1), k.count(2)) == (3, 3, 1)


@pytest.mark.parametrize("data, pointer", [
    ({"simplices": [[0, 0]]}, "/simplices/0"),
    ({"simplices": [[0, 1]], "weights": {"1": [0]}}, "/weights/1/0"),
    ({"simplices": [[0, 1]], "weights": {"0": [1]}}, "/weights/0"),
    ({"simplices": [[-1]]}, "/simplices/0"),
])
def test_load_errors_point_at_the_problem(data, pointer):
    with pytest.raises(MeshError) as err:
        load_complex(data)
    assert err.value.pointer == pointer


def test_boundary_examples():
    assert boundary_subcomplex(fixture("interval2")).simplices == {(0,), (2,)}
    assert boundary_subcomplex(fixture("circle")).is_empty()
    tri = boundary_subcomplex(fixture("triangle"))
    assert tri.simplices == {(0,), (1,), (2,), (0, 1), (1, 2), (0, 2)}


def test_boundary_rejects_non_pseudomanifold():
    with pytest.raises(MeshError):
        boundary_subcomplex(build_complex([[0, 1, 2], [0, 1, 3], [0, 1, 4]]))
    with pytest.raises(MeshError):
        boundary_subcomplex(build_complex([[0, 1, 2], [2, 3]]))


def test_explicit_boundary_must_lie_in_complex():
    k = fixture("interval2")
    assert explicit_boundary(k, [[0]]).simplices == {(0,)}
    with pytest.raises(MeshError):
        explicit_boundary(k, [[0, 2]])


def test_cochain_pair_examples():
    circle = cochain_pair(fixture("circle"))
    assert circle.is_trivial()
    p = cochain_pair(fixture("interval2"))
    assert p.small.domain(0) == Subspace.span([[0, 1, 0]], 3)
    t = cochain_pair(fixture("triangle"))
    assert t.small.domain(0).is_zero() and t.small.domain(1).is_zero() and t.small.domain(2).is_full()


def test_coboundary_signs():
    k = fixture("triangle")
    assert coboundary_matrix(k, 1) == RatMatrix.from_rows([[1, -1, 1]])
    assert coboundary_matrix(k, 0) == RatMatrix.from_rows([[-1, 1, 0], [-1, 0, 1], [0, -1, 1]])


def test_cone_examples():
    disk = cone(fixture("circle"))
    assert (disk.count(0), disk.count(1), disk.count(2)) == (4, 6, 3)
    assert cone(build_complex([[0]])).simplices == (((0,), (1,)), ((0, 1),))
    # Two points coned off: the path 0 - 2 - 1 with the apex in the middle.
    path = cone(build_complex([[0], [1]]))
    assert path.simplices[1] == ((0, 2), (1, 2))
    assert boundary_subcomplex(path).simplices == {(0,), (1,)}


def test_reference_examples():
    assert reference_cohomology(fixture("circle")) == (1, 1)
    k = fixture("interval2")
    assert reference_cohomology(k) == (1, 0)
    assert reference_cohomology(k, boundary_subcomplex(k)) == (0, 1)
    disk = fixture("disk")
    assert reference_cohomology(disk) == (1, 0, 0)
    assert reference_cohomology(disk, boundary_subcomplex(disk)) == (0, 0, 1)
    annulus = fixture("annulus")
    assert reference_cohomology(annulus) == (1, 1, 0)
    assert reference_cohomology(annulus, boundary_subcomplex(annulus)) == (0, 1, 1)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=0, max_size=5))
def test_bareiss_rank_matches_rational_rank(rows):
    expected = rref(RatMatrix.from_rows(rows, 4))[1] if rows else 0
    assert _integer_rank(rows) == expected


@given(st.integers(0, 2**32))
def test_cone_is_acyclic(seed):
    k = random_simplicial(rng_for(seed))
    ref = reference_cohomology(cone(k))
    assert ref == (1,) + (0,) * (len(ref) - 1)


@given(st.integers(0, 2**32))
def test_pair_matches_reference(seed):
    k = random_simplicial(rng_for(seed))
    b = explicit_boundary(k, [list(s) for s in k.simplices[0][:1]])
    p = cochain_pair(k, b)
    assert betti(p.big) == reference_cohomology(k)
    assert betti(p.small) == reference_cohomology(k, b)
    cells = sum((-1) ** q * k.count(q) for q in range(k.dim + 1))
    assert sum((-1) ** q * h for q, h in enumerate(reference_cohomology(k))) == cells
