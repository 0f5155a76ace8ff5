import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgepair.complexes import HilbertComplex, laplacian
from hodgepair.generate import RandomPairProfile, generate_random_pair
from hodgepair.linalg import RatMatrix, Subspace, orthogonal
from hodgepair.pairs import (
    ExtensionError,
    build_P,
    curly_Hm,
    delta_M,
    harmonic_complexes,
    make_pair,
    mixed_deltas,
    quotient_morphisms,
)
from hodgepair.relations import full_relation, relation_from_matrix

from conftest import euclid

D0 = RatMatrix.from_rows([[-1, 1, 0], [0, -1, 1]])
LINEAR = Subspace.span([[1, 1, 1], [0, 1, 2]], 3)  # {u : 2 u1 = u0 + u2}


def test_trivial_pair_is_valid():
    c = HilbertComplex.from_matrices(euclid(3, 2), [D0])
    p = make_pair(c, c)
    assert p.is_trivial()


def test_interval_pair_is_valid(interval2):
    assert not interval2.is_trivial()
    assert interval2.small.domain(0) == Subspace.span([[0, 1, 0]], 3)


def test_extension_violation_has_witness():
    big = HilbertComplex.from_matrices(euclid(3, 2), [D0])
    other = RatMatrix.from_rows([[1, 0, 0], [0, 0, 0]])
    small = HilbertComplex.from_matrices(euclid(3, 2), [other], [Subspace.span([[1, 0, 0]], 3), None])
    with pytest.raises(ExtensionError) as err:
        make_pair(big, small)
    assert err.value.q == 0
    assert not big.d(0).graph.contains_vector(err.value.witness)


def test_mixed_deltas_examples(interval2, interval1):
    c = HilbertComplex.from_matrices(euclid(3, 2), [D0])
    md = mixed_deltas(make_pair(c, c), 1)
    assert md.delta_m == md.delta_M == relation_from_matrix(D0.T, *euclid(2, 3))
    md = mixed_deltas(interval2, 1)
    assert md.delta_m == relation_from_matrix(D0.T, *euclid(2, 3))
    assert md.delta_M.mul == Subspace.span([[1, 0, 0], [0, 0, 1]], 3)
    assert mixed_deltas(interval1, 1).delta_M == full_relation(*euclid(1, 2))


def test_P_examples(interval2):
    c = interval2.big
    trivial = make_pair(c, c)
    for q in (0, 1):
        assert build_P(trivial, q) == laplacian(c, q)
    # By hand: d0 u = (u1 - u0, u2 - u1), then delta_{1,M} fixes only
    # w1 = 2 u1 - u0 - u2 and leaves w0, w2 free.
    p0 = build_P(interval2, 0)
    hand = Subspace.span([[1, 0, 0, 0, -1, 0], [0, 1, 0, 0, 2, 0], [0, 0, 1, 0, -1, 0],
                          [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]], 6)
    assert p0.graph == hand
    assert p0.mul == Subspace.span([[1, 0, 0], [0, 0, 1]], 3)
    assert p0.ker_inclusive == LINEAR
    assert build_P(interval2, 1).ker_inclusive.is_full()


def test_harmonic_complexes_interval2(interval2):
    hc = harmonic_complexes(interval2)
    assert hc.kerP[0] == LINEAR and hc.kerP[1].is_full()
    assert hc.dPrime[0].ran == Subspace.span([[1, 1]], 2)
    assert hc.hPrime == {0: 1, 1: 1}
    assert hc.hDoublePrime == {0: 0, 1: 2}
    assert hc.curlyHm[0].is_zero()
    assert hc.chain_condition and hc.chain_condition_b


def test_harmonic_complexes_interval1(interval1):
    hc = harmonic_complexes(interval1)
    assert hc.hPrime == {0: 1, 1: 0}
    assert hc.hDoublePrime == {0: 0, 1: 1}


def test_strict_kernel_mode_degenerates_on_interval(interval2):
    hc = harmonic_complexes(interval2, "strict")
    assert hc.kerP[1].is_zero()
    with pytest.raises(ValueError):
        harmonic_complexes(interval2, "loose")


def test_quotient_morphisms_interval2(interval2):
    m = quotient_morphisms(interval2, 1)
    assert m.tilde.domain_dim == 1 and m.tilde.codomain_dim == 1
    assert m.tilde.isomorphism
    assert m.tilde.matrix.data == ((2,),)


def test_quotient_morphisms_trivial_pair(interval2):
    c = interval2.big
    m = quotient_morphisms(make_pair(c, c), 1)
    assert m.hat.domain_dim == 0 and m.hat.injective and m.hat.well_defined


def random_pairs(density):
    prof = RandomPairProfile((3, 4, 3), (1, 0, 1), density)
    return st.integers(0, 2**32).map(lambda s: generate_random_pair(prof, s))


@given(random_pairs(1.0))
def test_dense_random_pair_morphisms_well_defined(p):
    for q in p.degrees():
        m = quotient_morphisms(p, q)
        assert all(x.well_defined for x in (m.hat, m.check, m.tilde, m.bar))


@given(random_pairs(1.0))
def test_trivial_pair_collapse(p):
    hc = harmonic_complexes(p)
    for q in p.degrees():
        assert build_P(p, q) == laplacian(p.big, q)
        k = laplacian(p.big, q).ker_inclusive.dim
        assert hc.hPrime[q] == hc.hDoublePrime[q] == k


@given(st.sampled_from([0.0, 0.5, 1.0]).flatmap(random_pairs))
def test_pair_invariants(p):
    hc = harmonic_complexes(p)
    for q in p.degrees():
        md = mixed_deltas(p, q)
        assert md.delta_m <= md.delta_M
        assert hc.dPrime[q].ker_inclusive == hc.kerP[q] & p.big.kernel(q)
        hm = curly_Hm(p, q)
        rest = p.big.image(q - 1) + delta_M(p, q + 1).ran
        assert orthogonal(hm, rest, p.space(q)) and hm.dim + rest.dim == p.space(q).dim
        assert hc.hPrime[q] >= 0 and hc.hDoublePrime[q] >= 0
