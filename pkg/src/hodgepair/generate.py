"""Seeded random complexes, pairs and relations with exact rational entries.

Each instance draws from its own ``SeedSequence([seed, index])`` stream, so
instance ``i`` is the same whether it is generated alone, in a batch, or on
another thread.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .complexes import HilbertComplex
from .linalg import InnerProductSpace, RatMatrix, Subspace, rref
from .pairs import ComplexPair, make_pair
from .relations import LinearRelation

MAX_DIM = 8


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class RandomPairProfile:
    dims: tuple[int, ...]
    cohomology: tuple[int, ...]
    density: float = 1.0
    entry_range: int = 3

    def __post_init__(self):
        if not self.dims:
            raise ProfileError("a profile needs at least one degree")
        if len(self.cohomology) != len(self.dims):
            raise ProfileError("one cohomology target per degree is required")
        if any(not 0 <= d <= MAX_DIM for d in self.dims):
            raise ProfileError(f"space dimensions must lie in [0, {MAX_DIM}]")
        if any(h < 0 or h > d for h, d in zip(self.cohomology, self.dims)):
            raise ProfileError("each cohomology target must lie between 0 and the space dimension")
        if not 0.0 <= self.density <= 1.0:
            raise ProfileError("density must lie in [0, 1]")
        ranks = boundary_ranks(self.dims, self.cohomology)
        if ranks is None:
            raise ProfileError("dimensions and cohomology targets are inconsistent")

    @property
    def n(self) -> int:
        return len(self.dims) - 1

    @classmethod
    def from_json(cls, data: dict) -> "RandomPairProfile":
        try:
            return cls(tuple(data["dims"]), tuple(data["cohomology"]), float(data.get("density", 1.0)),
                       int(data.get("entry_range", 3)))
        except KeyError as e:
            raise ProfileError(f"profile is missing {e.args[0]!r}") from None


def boundary_ranks(dims: Sequence[int], coh: Sequence[int]) -> list[int] | None:
    """Ranks ``r_q`` of ``d_q`` from ``n_q = r_{q-1} + h_q + r_q``, or None if impossible."""
    ranks, prev = [], 0
    for n, h in zip(dims, coh):
        r = n - h - prev
        if r < 0:
            return None
        ranks.append(r)
        prev = r
    if ranks[-1] != 0:
        return None
    for q in range(len(dims) - 1):
        if ranks[q] > dims[q + 1]:
            return None
    return ranks


PROFILES = {
    "trivial": RandomPairProfile((3, 4, 3), (1, 0, 1), 1.0),
    "restricted": RandomPairProfile((3, 4, 3), (1, 0, 1), 0.5),
}


def load_profile(name_or_path: str) -> RandomPairProfile | str:
    """A named profile, ``"mixed"`` (random shapes per instance), or a JSON file."""
    if name_or_path in PROFILES or name_or_path == "mixed":
        return PROFILES.get(name_or_path, "mixed")
    path = Path(name_or_path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise ProfileError(f"unknown profile {name_or_path!r}") from None
    return RandomPairProfile.from_json(data)


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), index]))


def _ints(rng: np.random.Generator, shape, lo: int, hi: int):
    return rng.integers(lo, hi + 1, size=shape).tolist()


def random_matrix(rng, rows: int, cols: int, entry_range: int = 3) -> RatMatrix:
    if rows == 0 or cols == 0:
        return RatMatrix.zeros(rows, cols)
    return RatMatrix.from_rows(_ints(rng, (rows, cols), -entry_range, entry_range), cols)


def random_invertible(rng, n: int, entry_range: int = 3) -> RatMatrix:
    while True:
        m = random_matrix(rng, n, n, entry_range)
        if n == 0 or rref(m)[1] == n:
            return m


def random_gram(rng, n: int, entry_range: int = 2) -> RatMatrix:
    """``A^T A + I`` for a random integer ``A``: symmetric positive definite."""
    a = random_matrix(rng, n, n, entry_range)
    return a.T @ a + RatMatrix.identity(n)


def random_space(rng, n: int) -> InnerProductSpace:
    return InnerProductSpace(n, random_gram(rng, n))


def random_subspace(rng, ambient: int, dim: int, entry_range: int = 3) -> Subspace:
    while True:
        rows = _ints(rng, (dim, ambient), -entry_range, entry_range) if dim and ambient else []
        s = Subspace.span(rows, ambient)
        if s.dim == dim:
            return s


def _normal_form(dims: Sequence[int], coh: Sequence[int]) -> list[RatMatrix]:
    """Block matrices ``d_q`` sending the last ``r_q`` coordinates of degree q onto the first ``r_q`` of q+1.

    Degree q splits as ``[image of d_{q-1} | harmonic | moved by d_q]``.
    """
    ranks = boundary_ranks(dims, coh)
    mats = []
    for q in range(len(dims) - 1):
        r = ranks[q]
        rows = [[Fraction(0)] * dims[q] for _ in range(dims[q + 1])]
        for i in range(r):
            rows[i][dims[q] - r + i] = Fraction(1)
        mats.append(RatMatrix.from_rows(rows, dims[q]))
    return mats


def random_complex(rng, dims: Sequence[int], coh: Sequence[int], entry_range: int = 3,
                   spaces: Sequence[InnerProductSpace] | None = None) -> HilbertComplex:
    """Everywhere-defined complex with prescribed cohomology, in random coordinates."""
    base = _normal_form(dims, coh)
    changes = [random_invertible(rng, n, entry_range) for n in dims]
    mats = [changes[q + 1] @ base[q] @ changes[q].inverse() for q in range(len(base))]
    if spaces is None:
        spaces = [random_space(rng, n) for n in dims]
    return HilbertComplex.from_matrices(spaces, mats)


def invariant_domains(rng, big: HilbertComplex, density: float, entry_range: int = 3) -> list[Subspace]:
    """A chain ``D_q`` with ``d_q(D_q) ⊆ D_{q+1}``; density 1 gives full domains."""
    domains: list[Subspace] = []
    prev = None
    for q in big.degrees():
        n = big.space(q).dim
        seed_dim = round(density * n)
        d = random_subspace(rng, n, seed_dim, entry_range) if seed_dim < n else Subspace.full(n)
        if prev is not None:
            d = d + big.d(q - 1).image(prev)
        domains.append(d)
        prev = d
    return domains


def generate_random_pair(profile: RandomPairProfile, seed: int, index: int = 0) -> ComplexPair:
    rng = rng_for(seed, index)
    big = random_complex(rng, profile.dims, profile.cohomology, profile.entry_range)
    if profile.density >= 1.0:
        small = big
    else:
        domains = invariant_domains(rng, big, profile.density, profile.entry_range)
        mats = [big.d(q).matrix() for q in range(big.n)]
        small = HilbertComplex.from_matrices(big.spaces, mats, domains)
    return make_pair(big, small, label=f"seed{seed}-{index}")


def random_profile(rng, max_n: int = 3, max_dim: int = 5, density: float | None = None) -> RandomPairProfile:
    """A random consistent shape: pick ranks first, then harmonic parts."""
    n = int(rng.integers(1, max_n + 1))
    while True:
        ranks = [int(rng.integers(0, 3)) for _ in range(n)] + [0]
        harm = [int(rng.integers(0, 3)) for _ in range(n + 1)]
        dims = [(ranks[q - 1] if q else 0) + harm[q] + ranks[q] for q in range(n + 1)]
        if all(d <= max_dim for d in dims) and sum(dims):
            break
    dens = float(rng.choice([0.0, 0.34, 0.5, 0.67, 1.0])) if density is None else density
    return RandomPairProfile(tuple(dims), tuple(harm), dens)


def generate_mixed_pair(seed: int, index: int = 0) -> ComplexPair:
    rng = rng_for(seed, index)
    prof = random_profile(rng)
    sub_seed = int(rng.integers(0, 2**63))
    return generate_random_pair(prof, sub_seed, 0)


def generate_pairs(profile: RandomPairProfile | str, seed: int, count: int) -> list[ComplexPair]:
    out = []
    for i in range(count):
        p = generate_mixed_pair(seed, i) if profile == "mixed" else generate_random_pair(profile, seed, i)
        p.label = f"seed{seed}-{i}"
        out.append(p)
    return out


def random_relation(rng, src_dim: int, dst_dim: int, entry_range: int = 3) -> LinearRelation:
    """A relation with random graph dimension and random Gram matrices on both sides."""
    src = random_space(rng, src_dim)
    dst = random_space(rng, dst_dim)
    g = int(rng.integers(0, src_dim + dst_dim + 1))
    graph = random_subspace(rng, src_dim + dst_dim, g, entry_range)
    return LinearRelation(src, dst, graph)


def random_valid_complex(rng, max_n: int = 4, max_dim: int = 6) -> HilbertComplex:
    n = int(rng.integers(0, max_n + 1))
    while True:
        ranks = [int(rng.integers(0, 4)) for _ in range(n)] + [0]
        harm = [int(rng.integers(0, 3)) for _ in range(n + 1)]
        dims = [(ranks[q - 1] if q else 0) + harm[q] + ranks[q] for q in range(n + 1)]
        if all(d <= max_dim for d in dims):
            return random_complex(rng, dims, harm)


def random_simplicial(rng, max_vertices: int = 6, max_simplices: int = 5):
    """A small random simplicial complex given by a few random top simplices."""
    from .simplicial import build_complex
    nv = int(rng.integers(1, max_vertices + 1))
    count = int(rng.integers(1, max_simplices + 1))
    tops = []
    for _ in range(count):
        size = int(rng.integers(1, min(nv, 4) + 1))
        tops.append(sorted(int(v) for v in rng.choice(nv, size=size, replace=False)))
    return build_complex(tops)
