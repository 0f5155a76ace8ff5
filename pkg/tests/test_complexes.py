import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgepair.complexes import (
    HilbertComplex,
    InvalidComplexError,
    betti,
    cohomology,
    dual,
    euler_characteristic,
    harmonic_space,
    hodge_decompose,
    is_fredholm,
    laplacian,
    triple_is_orthogonal,
    triple_spans,
    validate,
)
from hodgepair.generate import random_valid_complex, rng_for
from hodgepair.linalg import InnerProductSpace, RatMatrix, Subspace

from conftest import euclid

D0 = RatMatrix.from_rows([[-1, 1, 0], [0, -1, 1]])
CIRCLE = RatMatrix.from_rows([[-1, 1, 0], [0, -1, 1], [-1, 0, 1]])


def interval():
    return HilbertComplex.from_matrices(euclid(3, 2), [D0])


def circle():
    return HilbertComplex.from_matrices(euclid(3, 3), [CIRCLE])


def relative_interval():
    domains = [Subspace.span([[0, 1, 0]], 3), Subspace.full(2)]
    return HilbertComplex.from_matrices(euclid(3, 2), [D0], domains)


def test_validate_examples():
    assert validate(interval()).valid
    assert validate(relative_interval()).valid
    bad = HilbertComplex.from_matrices(euclid(1, 1, 1), [RatMatrix.from_rows([[1]]), RatMatrix.from_rows([[1]])])
    diag = validate(bad)
    assert not diag.valid and diag.first_failure == 0


def test_invalid_complex_is_rejected_downstream():
    bad = HilbertComplex.from_matrices(euclid(1, 1, 1), [RatMatrix.from_rows([[1]]), RatMatrix.from_rows([[1]])])
    with pytest.raises(InvalidComplexError):
        cohomology(bad, 0)


def test_cohomology_examples():
    assert betti(circle()) == (1, 1)
    assert betti(interval()) == (1, 0)
    assert betti(relative_interval()) == (0, 1)
    with pytest.raises(IndexError):
        cohomology(circle(), 2)


def test_harmonic_representatives_match_dimensions():
    for c in (circle(), interval(), relative_interval()):
        for q in c.degrees():
            dim, harm = cohomology(c, q)
            assert harm.dim == dim


def test_dual_examples():
    assert betti(dual(circle())) == (1, 1)
    assert betti(dual(interval())) == (0, 1)
    assert dual(dual(interval())) == interval()


def test_laplacian_of_interval_is_path_graph_laplacian():
    lap = laplacian(interval(), 0)
    assert lap.matrix() == RatMatrix.from_rows([[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert lap.ker_inclusive == Subspace.span([[1, 1, 1]], 3)


def test_laplacian_of_zero_complex():
    c = HilbertComplex.from_matrices(euclid(0, 0), [RatMatrix.zeros(0, 0)])
    assert laplacian(c, 0).graph.is_zero()


def test_hodge_decompose_examples():
    t = hodge_decompose(circle(), 1)
    assert (t.harmonic.dim, t.image_d.dim, t.image_delta.dim) == (1, 2, 0)
    t = hodge_decompose(interval(), 0)
    assert (t.harmonic.dim, t.image_d.dim, t.image_delta.dim) == (1, 0, 2)
    zero = HilbertComplex.from_matrices(euclid(2, 3), [RatMatrix.zeros(3, 2)])
    assert hodge_decompose(zero, 1).harmonic.is_full()


def test_weighted_gram_changes_bases_not_dimensions():
    spaces = [InnerProductSpace.diagonal([1, 2, 3]), InnerProductSpace.diagonal([5, 1])]
    c = HilbertComplex.from_matrices(spaces, [D0])
    assert betti(c) == (1, 0)
    assert harmonic_space(c, 0) == Subspace.span([[1, 1, 1]], 3)


def test_fredholm_is_automatic():
    assert is_fredholm(circle())


@given(st.integers(0, 2**32))
def test_random_complex_hodge_properties(seed):
    c = random_valid_complex(rng_for(seed), max_n=3, max_dim=5)
    assert validate(c).valid
    for q in c.degrees():
        dim, harm = cohomology(c, q)
        t = hodge_decompose(c, q)
        assert dim == harm.dim
        assert triple_is_orthogonal(t, c.space(q)) and triple_spans(t)
        lap = laplacian(c, q)
        assert lap.ker_inclusive == harm
        assert lap.ran == t.image_d + t.image_delta
    spaces, coh = euler_characteristic(c)
    assert spaces == coh
