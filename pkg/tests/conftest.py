import pytest
from hypothesis import HealthCheck, settings

from hodgepair.complexes import HilbertComplex
from hodgepair.linalg import InnerProductSpace, RatMatrix, Subspace
from hodgepair.pairs import make_pair

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def euclid(*dims):
    return [InnerProductSpace.euclidean(n) for n in dims]


def interval_pair(edges: int):
    """Path with ``edges`` edges; the minimal complex vanishes on both end vertices."""
    n = edges + 1
    rows = [[0] * n for _ in range(edges)]
    for i in range(edges):
        rows[i][i], rows[i][i + 1] = -1, 1
    d0 = RatMatrix.from_rows(rows, n)
    spaces = euclid(n, edges)
    big = HilbertComplex.from_matrices(spaces, [d0])
    interior = [[int(j == i) for j in range(n)] for i in range(1, n - 1)]
    small = HilbertComplex.from_matrices(spaces, [d0], [Subspace.span(interior, n), Subspace.full(edges)])
    return make_pair(big, small)


@pytest.fixture
def interval2():
    return interval_pair(2)


@pytest.fixture
def interval1():
    return interval_pair(1)


def integer_rank(m) -> int:
    """Rank of a rational matrix after clearing denominators, via fraction-free elimination."""
    from math import lcm

    from hodgepair.simplicial import _integer_rank
    den = lcm(1, *(x.denominator for x in m.entries))
    return _integer_rank([[int(x * den) for x in row] for row in m.data])
