"""Finite-dimensional Hilbert complexes with relation differentials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import DimensionError, InnerProductSpace, RatMatrix, Subspace, orthogonal
from .relations import (
    LinearRelation,
    add,
    adjoint,
    compose,
    relation_from_matrix,
    restrict,
    zero_map,
)

ZERO_SPACE = InnerProductSpace(0, RatMatrix(0, 0, ()))


class InvalidComplexError(ValueError):
    """Raised when a downstream operation receives a complex that fails validation."""


@dataclass(frozen=True)
class DegreeDiagnostic:
    q: int
    image_in_next_domain: bool
    composition_vanishes: bool

    @property
    def ok(self) -> bool:
        return self.image_in_next_domain and self.composition_vanishes


@dataclass(frozen=True)
class Diagnostic:
    degrees: tuple[DegreeDiagnostic, ...]

    @property
    def valid(self) -> bool:
        return all(d.ok for d in self.degrees)

    @property
    def first_failure(self) -> int | None:
        return next((d.q for d in self.degrees if not d.ok), None)


@dataclass(frozen=True)
class HodgeTriple:
    harmonic: Subspace
    image_d: Subspace
    image_delta: Subspace


class HilbertComplex:
    """Spaces ``h_0..h_n`` with differentials ``d_q : h_q -> h_{q+1}``.

    ``diffs`` may hold ``n`` relations, or ``n + 1`` when the top degree also
    carries a (possibly restricted) map into the zero space; this is how a
    relative complex records its domain in the top degree. Degrees outside
    ``[0, n]`` are zero spaces with zero differentials.
    """

    def __init__(self, spaces: Sequence[InnerProductSpace], diffs: Sequence[LinearRelation]):
        spaces = tuple(spaces)
        diffs = list(diffs)
        if not spaces:
            raise DimensionError("a complex needs at least one space")
        n = len(spaces) - 1
        if len(diffs) == n:
            diffs.append(zero_map(spaces[n], ZERO_SPACE))
        if len(diffs) != n + 1:
            raise DimensionError(f"{len(spaces)} spaces need {n} or {n + 1} differentials, got {len(diffs)}")
        for q, d in enumerate(diffs):
            target = spaces[q + 1] if q < n else ZERO_SPACE
            if d.src != spaces[q] or d.dst != target:
                raise DimensionError(f"differential {q} does not map h_{q} -> h_{q + 1}")
        self.spaces = spaces
        self.diffs = tuple(diffs)
        self._cache: dict = {}

    @classmethod
    def from_matrices(cls, spaces: Sequence[InnerProductSpace], matrices: Sequence[RatMatrix],
                      domains: Sequence[Subspace | None] | None = None) -> "HilbertComplex":
        spaces = tuple(spaces)
        n = len(spaces) - 1
        domains = list(domains) if domains is not None else [None] * len(matrices)
        diffs = [relation_from_matrix(m, spaces[q], spaces[q + 1] if q < n else ZERO_SPACE, domains[q])
                 for q, m in enumerate(matrices)]
        if len(domains) > len(matrices):
            diffs.append(zero_map(spaces[n], ZERO_SPACE, domains[n]))
        return cls(spaces, diffs)

    @property
    def n(self) -> int:
        return len(self.spaces) - 1

    def degrees(self) -> range:
        return range(self.n + 1)

    def space(self, q: int) -> InnerProductSpace:
        return self.spaces[q] if 0 <= q <= self.n else ZERO_SPACE

    def d(self, q: int) -> LinearRelation:
        if 0 <= q <= self.n:
            return self.diffs[q]
        return zero_map(self.space(q), self.space(q + 1))

    def delta(self, q: int) -> LinearRelation:
        """``delta_q``: the adjoint of ``d_{q-1}``."""
        key = ("delta", q)
        if key not in self._cache:
            self._cache[key] = adjoint(self.d(q - 1))
        return self._cache[key]

    def domain(self, q: int) -> Subspace:
        return self.d(q).dom

    def kernel(self, q: int) -> Subspace:
        return self.d(q).ker_inclusive

    def image(self, q: int) -> Subspace:
        """Image of ``d_q`` inside ``h_{q+1}``."""
        return self.d(q).ran

    def validate(self) -> Diagnostic:
        return validate(self)

    def require_valid(self) -> "HilbertComplex":
        if "valid" not in self._cache:
            self._cache["valid"] = validate(self)
        diag = self._cache["valid"]
        if not diag.valid:
            raise InvalidComplexError(f"complex fails the chain conditions at degree {diag.first_failure}")
        return self

    def __eq__(self, other) -> bool:
        return isinstance(other, HilbertComplex) and self.spaces == other.spaces and self.diffs == other.diffs

    def __hash__(self):
        return hash(self.diffs)


def validate(c: HilbertComplex) -> Diagnostic:
    out = []
    for q in range(-1, c.n + 1):
        dq, dn = c.d(q), c.d(q + 1)
        into = dq.ran <= dn.dom
        vanishes = compose(dn, dq).ran.is_zero()
        if q >= 0 or not (into and vanishes):
            out.append(DegreeDiagnostic(max(q, 0), into, vanishes))
    return Diagnostic(tuple(out))


def _check_degree(c: HilbertComplex, q: int):
    if not 0 <= q <= c.n:
        raise IndexError(f"degree {q} outside [0, {c.n}]")


def cohomology(c: HilbertComplex, q: int) -> tuple[int, Subspace]:
    """``dim H^q`` from ranks, and the harmonic representatives ``ker d_q ∩ ker delta_q``."""
    c.require_valid()
    _check_degree(c, q)
    dim = c.kernel(q).dim - c.image(q - 1).dim
    return dim, harmonic_space(c, q)


def harmonic_space(c: HilbertComplex, q: int) -> Subspace:
    return c.kernel(q) & c.delta(q).ker_inclusive


def betti(c: HilbertComplex) -> tuple[int, ...]:
    return tuple(cohomology(c, q)[0] for q in c.degrees())


def dual(c: HilbertComplex) -> HilbertComplex:
    """The complex ``h_n -> ... -> h_0`` of adjoints; degree ``k`` holds ``h_{n-k}``."""
    c.require_valid()
    spaces = tuple(reversed(c.spaces))
    diffs = [c.delta(c.n - k) for k in range(c.n)]
    # Top degree of the dual is h_0; its outgoing map is delta_0 into the zero space.
    diffs.append(c.delta(0))
    return HilbertComplex(spaces, diffs)


def laplacian(c: HilbertComplex, q: int) -> LinearRelation:
    """``d_{q-1} delta_q + delta_{q+1} d_q`` on its natural domain."""
    c.require_valid()
    down = compose(c.d(q - 1), c.delta(q))
    up = compose(c.delta(q + 1), c.d(q))
    lap = add(down, up)
    # Domain clause: s in D(d_q) ∩ D(delta_q) with d_q s ∈ D(delta_{q+1}) and
    # delta_q s ∈ D(d_{q-1}); relationally this is dom(up) ∩ dom(down).
    return restrict(lap, up.dom & down.dom)


def hodge_decompose(c: HilbertComplex, q: int) -> HodgeTriple:
    c.require_valid()
    _check_degree(c, q)
    return HodgeTriple(harmonic_space(c, q), c.image(q - 1), c.delta(q + 1).ran)


def triple_is_orthogonal(t: HodgeTriple, space: InnerProductSpace) -> bool:
    return (orthogonal(t.harmonic, t.image_d, space) and orthogonal(t.harmonic, t.image_delta, space)
            and orthogonal(t.image_d, t.image_delta, space))


def triple_spans(t: HodgeTriple) -> bool:
    return (t.harmonic + t.image_d + t.image_delta).is_full() and \
        t.harmonic.dim + t.image_d.dim + t.image_delta.dim == t.harmonic.ambient_dim


def is_fredholm(c: HilbertComplex) -> bool:
    """Finite-dimensional complexes always have finite-dimensional cohomology."""
    return True


def is_weak_fredholm(c: HilbertComplex) -> bool:
    return True


def euler_characteristic(c: HilbertComplex) -> tuple[int, int]:
    """``(sum (-1)^q dim h_q, sum (-1)^q dim H^q)``."""
    spaces = sum((-1) ** q * c.space(q).dim for q in c.degrees())
    coh = sum((-1) ** q * h for q, h in enumerate(betti(c)))
    return spaces, coh
