"""Linear relations between finite-dimensional inner-product spaces.

A relation ``T : X -> Y`` is a subspace of ``X (+) Y``. Everything an
unbounded, possibly multivalued or non-densely-defined operator does in the
minimal/maximal setting is expressed through graphs: adjoints are Gram
orthocomplements of the rotated graph, and composition and sum are the
set-theoretic graph operations (no closure needed in finite dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .linalg import (
    DimensionError,
    InnerProductSpace,
    RatMatrix,
    Subspace,
    direct_sum,
    orthocomplement,
    solve,
)


@dataclass(frozen=True)
class RelationParts:
    dom: Subspace
    ran: Subspace
    mul: Subspace
    ker_inclusive: Subspace
    ker_strict: Subspace


@dataclass(frozen=True, eq=False)
class LinearRelation:
    src: InnerProductSpace
    dst: InnerProductSpace
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != self.src.dim + self.dst.dim:
            raise DimensionError(
                f"graph lives in Q^{self.graph.ambient_dim}, expected Q^{self.src.dim + self.dst.dim}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearRelation):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.graph == other.graph

    def __hash__(self):
        return hash((self.src.dim, self.dst.dim, self.graph))

    def __le__(self, other: "LinearRelation") -> bool:
        """Graph inclusion: ``other`` extends ``self``."""
        _same_spaces(self, other)
        return self.graph <= other.graph

    @cached_property
    def product(self) -> InnerProductSpace:
        return direct_sum(self.src, self.dst)

    @cached_property
    def _src_idx(self) -> list[int]:
        return list(range(self.src.dim))

    @cached_property
    def _dst_idx(self) -> list[int]:
        return list(range(self.src.dim, self.src.dim + self.dst.dim))

    @cached_property
    def dom(self) -> Subspace:
        return self.graph.coords(self._src_idx)

    @cached_property
    def ran(self) -> Subspace:
        return self.graph.coords(self._dst_idx)

    @cached_property
    def mul(self) -> Subspace:
        vertical = Subspace.full(self.dst.dim).embed(self.src.dim, self.graph.ambient_dim)
        return (self.graph & vertical).coords(self._dst_idx)

    @cached_property
    def ker_inclusive(self) -> Subspace:
        horizontal = Subspace.full(self.src.dim).embed(0, self.graph.ambient_dim)
        return (self.graph & horizontal).coords(self._src_idx)

    @cached_property
    def ker_strict(self) -> Subspace:
        # Every image of u is u's single value plus mul, so all images vanish
        # only when mul is trivial.
        return self.ker_inclusive if self.mul.is_zero() else Subspace.zero(self.src.dim)

    def kernel(self, mode: str = "inclusive") -> Subspace:
        if mode == "inclusive":
            return self.ker_inclusive
        if mode == "strict":
            return self.ker_strict
        raise ValueError(f"unknown kernel mode {mode!r}")

    def is_single_valued(self) -> bool:
        return self.mul.is_zero()

    def is_everywhere_defined(self) -> bool:
        return self.dom.is_full()

    def image(self, s: Subspace) -> Subspace:
        """All images of vectors in ``s`` (including the multivalued part)."""
        return restrict(self, s & self.dom).ran if not s.is_full() else self.ran

    def image_of(self, v) -> tuple[Fraction, ...] | None:
        """One image of ``v``, or ``None`` when ``v`` is outside the domain."""
        n = self.src.dim
        if not self.graph.basis:
            return (Fraction(0),) * self.dst.dim if not any(v) else None
        src_part = RatMatrix.from_rows([g[:n] for g in self.graph.basis], n).T
        c = solve(src_part, v)
        if c is None:
            return None
        return tuple(sum((ci * g[n + j] for ci, g in zip(c, self.graph.basis)), Fraction(0))
                     for j in range(self.dst.dim))

    def matrix(self) -> RatMatrix:
        """Matrix of a single-valued everywhere-defined relation."""
        if not (self.is_single_valued() and self.is_everywhere_defined()):
            raise ValueError("relation is not an everywhere-defined map")
        cols = [self.image_of(e) for e in RatMatrix.identity(self.src.dim).data]
        if not cols:
            return RatMatrix.zeros(self.dst.dim, 0)
        return RatMatrix.from_rows(cols, self.dst.dim).T

    def parts(self) -> RelationParts:
        return parts(self)

    def to_json(self) -> dict:
        return {"from_dim": self.src.dim, "to_dim": self.dst.dim, "graph_basis": self.graph.to_lists()}


def _same_spaces(s: LinearRelation, t: LinearRelation):
    if s.src != t.src or s.dst != t.dst:
        raise DimensionError("relations act between different spaces")


def relation_from_matrix(a: RatMatrix, src: InnerProductSpace, dst: InnerProductSpace,
                         domain: Subspace | None = None) -> LinearRelation:
    """Graph of ``u -> a u`` for ``u`` in ``domain`` (default: all of ``src``)."""
    if a.shape != (dst.dim, src.dim):
        raise DimensionError(f"matrix of shape {a.shape} does not map Q^{src.dim} -> Q^{dst.dim}")
    if domain is None:
        domain = Subspace.full(src.dim)
    elif domain.ambient_dim != src.dim:
        raise DimensionError("domain is not a subspace of the source space")
    rows = [u + a.apply(u) for u in domain.basis]
    return LinearRelation(src, dst, Subspace.span(rows, src.dim + dst.dim))


def full_relation(src: InnerProductSpace, dst: InnerProductSpace) -> LinearRelation:
    return LinearRelation(src, dst, Subspace.full(src.dim + dst.dim))


def zero_relation(src: InnerProductSpace, dst: InnerProductSpace) -> LinearRelation:
    """The relation with graph ``{0}``: defined only at 0."""
    return LinearRelation(src, dst, Subspace.zero(src.dim + dst.dim))


def zero_map(src: InnerProductSpace, dst: InnerProductSpace, domain: Subspace | None = None) -> LinearRelation:
    return relation_from_matrix(RatMatrix.zeros(dst.dim, src.dim), src, dst, domain)


def adjoint(t: LinearRelation) -> LinearRelation:
    """Graph ``{(v, w) : <b, v> = <a, w> for all (a, b) in graph(t)}``."""
    n, m = t.src.dim, t.dst.dim
    rotated = Subspace.span([b[n:] + tuple(-x for x in b[:n]) for b in t.graph.basis], m + n)
    return LinearRelation(t.dst, t.src, orthocomplement(rotated, direct_sum(t.dst, t.src)))


def compose(s: LinearRelation, t: LinearRelation) -> LinearRelation:
    """``s o t``: pairs ``(u, w)`` with ``(u, v)`` in ``t`` and ``(v, w)`` in ``s`` for some ``v``."""
    if t.dst != s.src:
        raise DimensionError("cannot compose: intermediate spaces differ")
    x, y, z = t.src.dim, t.dst.dim, s.dst.dim
    total = x + y + z
    a = t.graph.embed(0, total) + Subspace.full(z).embed(x + y, total)
    b = s.graph.embed(x, total) + Subspace.full(x).embed(0, total)
    meet = a & b
    return LinearRelation(t.src, s.dst, meet.coords(list(range(x)) + list(range(x + y, total))))


def add(s: LinearRelation, t: LinearRelation) -> LinearRelation:
    """Graph ``{(u, v + w) : (u, v) in s, (u, w) in t}``."""
    _same_spaces(s, t)
    x, y = s.src.dim, s.dst.dim
    total = x + 2 * y
    a = s.graph.embed(0, total) + Subspace.full(y).embed(x + y, total)
    # t's graph placed at (u, _, w).
    t_rows = [b[:x] + (Fraction(0),) * y + b[x:] for b in t.graph.basis]
    b = Subspace.span(t_rows, total) + Subspace.full(y).embed(x, total)
    meet = a & b
    summed = [r[:x] + tuple(p + q for p, q in zip(r[x:x + y], r[x + y:])) for r in meet.basis]
    return LinearRelation(s.src, s.dst, Subspace.span(summed, x + y))


def parts(t: LinearRelation) -> RelationParts:
    return RelationParts(t.dom, t.ran, t.mul, t.ker_inclusive, t.ker_strict)


def restrict(t: LinearRelation, s: Subspace) -> LinearRelation:
    """``graph(t)`` intersected with ``s (+) Y``."""
    if s.ambient_dim != t.src.dim:
        raise DimensionError("restriction subspace is not in the source space")
    if s.is_full():
        return t
    total = t.graph.ambient_dim
    box = s.embed(0, total) + Subspace.full(t.dst.dim).embed(t.src.dim, total)
    return LinearRelation(t.src, t.dst, t.graph & box)
