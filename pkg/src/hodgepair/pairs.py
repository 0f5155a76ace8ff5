"""Pairs of nested complexes and their harmonic-vector complexes.

A :class:`ComplexPair` holds a maximal complex (``big``) and a minimal one
(``small``) on the same spaces with ``graph(d_{q,m}) ⊆ graph(d_{q,M})``.
The mixed adjoints are ``delta_{q,m} = (d_{q-1,M})*`` and
``delta_{q,M} = (d_{q-1,m})*``, and

    P_q = d_{q-1,M} delta_{q,M} + delta_{q+1,M} d_{q,M}.

``ker P_q`` carries two complexes: ``C'`` with ``d'_q = d_{q,M}|ker P_q`` and
``C''`` with ``d''_q = d_{q,m}|(ker P_q ∩ D(d_{q,m}))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import HilbertComplex, InvalidComplexError, harmonic_space
from .linalg import RatMatrix, Subspace, Vector, orthocomplement, project
from .relations import LinearRelation, add, adjoint, compose, restrict

KERNEL_MODES = ("inclusive", "strict")


class ExtensionError(ValueError):
    """``d_{q,M}`` does not extend ``d_{q,m}``."""

    def __init__(self, q: int, witness: Vector):
        self.q = q
        self.witness = witness
        super().__init__(f"graph of d_{q},m is not inside graph of d_{q},M (witness {list(map(str, witness))})")


@dataclass(frozen=True)
class MixedDeltas:
    delta_m: LinearRelation
    delta_M: LinearRelation


@dataclass(frozen=True)
class QuotientMorphism:
    """A linear map between quotients, written on complement bases.

    ``matrix`` has ``codomain_dim`` rows and ``domain_dim`` columns.
    """

    domain_dim: int
    codomain_dim: int
    matrix: RatMatrix
    well_defined: bool
    injective: bool
    surjective: bool
    failures: tuple[str, ...] = ()

    @property
    def rank(self) -> int:
        from .linalg import rref
        return rref(self.matrix)[1] if self.matrix.rows and self.matrix.cols else 0

    @property
    def isomorphism(self) -> bool:
        return self.well_defined and self.injective and self.surjective


@dataclass(frozen=True)
class QuotientMorphisms:
    hat: QuotientMorphism
    check: QuotientMorphism
    tilde: QuotientMorphism
    bar: QuotientMorphism


class ComplexPair:
    def __init__(self, big: HilbertComplex, small: HilbertComplex, reference: dict | None = None,
                 label: str = ""):
        self.big = big
        self.small = small
        # Optional topological reference dims (absolute/relative), set by mesh frontends.
        self.reference = reference
        self.label = label
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return self.big.n

    def degrees(self) -> range:
        return self.big.degrees()

    def space(self, q: int):
        return self.big.space(q)

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def is_trivial(self) -> bool:
        return all(self.big.d(q) == self.small.d(q) for q in self.degrees())

    def dense(self, q: int) -> bool:
        return self.small.domain(q).is_full()


def make_pair(big: HilbertComplex, small: HilbertComplex, **kw) -> ComplexPair:
    if big.spaces != small.spaces:
        raise ValueError("the two complexes must live on the same spaces")
    big.require_valid()
    small.require_valid()
    for q in big.degrees():
        gm, gM = small.d(q).graph, big.d(q).graph
        for b in gm.basis:
            if not gM.contains_vector(b):
                raise ExtensionError(q, b)
    return ComplexPair(big, small, **kw)


def mixed_deltas(p: ComplexPair, q: int) -> MixedDeltas:
    return p.cached(("deltas", q), lambda: MixedDeltas(adjoint(p.big.d(q - 1)), adjoint(p.small.d(q - 1))))


def delta_m(p: ComplexPair, q: int) -> LinearRelation:
    return mixed_deltas(p, q).delta_m


def delta_M(p: ComplexPair, q: int) -> LinearRelation:
    return mixed_deltas(p, q).delta_M


def build_P(p: ComplexPair, q: int) -> LinearRelation:
    def make():
        down = compose(p.big.d(q - 1), delta_M(p, q))
        up = compose(delta_M(p, q + 1), p.big.d(q))
        # D(P_q): s ∈ D(d_{q,M}) ∩ D(delta_{q,M}) with some image under d_{q,M}
        # in D(delta_{q+1,M}) and some image under delta_{q,M} in D(d_{q-1,M}).
        clause = up.dom & down.dom & p.big.domain(q) & delta_M(p, q).dom
        return restrict(add(down, up), clause)
    return p.cached(("P", q), make)


@dataclass
class HarmonicComplexes:
    kernel_mode: str
    kerP: dict[int, Subspace]
    dPrime: dict[int, LinearRelation]
    dDoublePrime: dict[int, LinearRelation]
    hPrime: dict[int, int]
    hDoublePrime: dict[int, int]
    curlyHm: dict[int, Subspace]
    imageMapDim: dict[int, int]
    lemma_l0: dict[int, bool]
    lemma_l01: dict[int, bool]
    lemma_l0b: dict[int, bool]

    @property
    def chain_condition(self) -> bool:
        return all(self.lemma_l0.values())

    @property
    def chain_condition_b(self) -> bool:
        return all(self.lemma_l0b.values())


def kernel_P(p: ComplexPair, q: int, mode: str = "inclusive") -> Subspace:
    if not 0 <= q <= p.n:
        return Subspace.zero(p.space(q).dim)
    return build_P(p, q).kernel(mode)


def curly_Hm(p: ComplexPair, q: int) -> Subspace:
    """``ker d_{q,m} ∩ ker delta_{q,m}``."""
    return p.small.kernel(q) & delta_m(p, q).ker_inclusive


def image_map_dim(p: ComplexPair, q: int) -> int:
    """Rank of ``H^q(C_m) -> H^q(C_M)``: ``ker d_{q,m} / (Im d_{q-1,M} ∩ ker d_{q,m})``."""
    k = p.small.kernel(q)
    return k.dim - (p.big.image(q - 1) & k).dim


def harmonic_complexes(p: ComplexPair, kernel_mode: str = "inclusive") -> HarmonicComplexes:
    if kernel_mode not in KERNEL_MODES:
        raise ValueError(f"kernel mode must be one of {KERNEL_MODES}")
    return p.cached(("harmonic", kernel_mode), lambda: _harmonic(p, kernel_mode))


def _harmonic(p: ComplexPair, mode: str) -> HarmonicComplexes:
    qs = list(p.degrees())
    kerP = {q: kernel_P(p, q, mode) for q in range(-1, p.n + 2)}
    small_dom = {q: p.small.domain(q) for q in range(-1, p.n + 2)}
    dP = {q: restrict(p.big.d(q), kerP[q]) for q in range(-1, p.n + 1)}
    dPP = {q: restrict(p.small.d(q), kerP[q] & small_dom[q]) for q in range(-1, p.n + 1)}

    hP, hPP, l0, l01, l0b = {}, {}, {}, {}, {}
    for q in qs:
        # If Im d'_{q-1} escapes ker P_q the quotient is taken against the part
        # that stays inside, so dimensions remain well-defined.
        incoming = dP[q - 1].ran & kerP[q]
        hP[q] = dP[q].ker_inclusive.dim - incoming.dim
        incoming_b = dPP[q - 1].ran & kerP[q] & small_dom[q]
        hPP[q] = dPP[q].ker_inclusive.dim - incoming_b.dim
        l0[q] = dP[q].ran <= kerP[q + 1]
        l0b[q] = dPP[q].ran <= (kerP[q + 1] & small_dom[q + 1])
        l01[q] = delta_M(p, q).image(kerP[q]) <= kerP[q - 1]
    return HarmonicComplexes(
        kernel_mode=mode,
        kerP={q: kerP[q] for q in qs},
        dPrime={q: dP[q] for q in qs},
        dDoublePrime={q: dPP[q] for q in qs},
        hPrime=hP,
        hDoublePrime=hPP,
        curlyHm={q: curly_Hm(p, q) for q in qs},
        imageMapDim={q: image_map_dim(p, q) for q in qs},
        lemma_l0=l0,
        lemma_l01=l01,
        lemma_l0b=l0b,
    )


def cohomology_dims(c: HilbertComplex) -> dict[int, int]:
    return {q: c.kernel(q).dim - c.image(q - 1).dim for q in range(-1, c.n + 1)}


def complement_in(sub: Subspace, whole: Subspace, space) -> Subspace:
    """Gram-orthogonal complement of ``sub`` inside ``whole`` (the quotient basis)."""
    return whole & orthocomplement(sub, space)


def _quotient_map(p: ComplexPair, q: int, source: Subspace, killed: Subspace,
                  extra: Subspace | None) -> QuotientMorphism:
    """Map ``source/killed (+) extra -> H^{q-1}(C_M)`` induced by ``delta_{q,M}``.

    An element ``u`` of ``source`` is sent to the class of an image
    ``delta_{q,M} u`` lying in ``ker d_{q-1,M}``; ``extra`` (if any) is sent to
    its own class. Classes are written in the harmonic basis of degree q-1.
    """
    hq = p.space(q)
    hq1 = p.space(q - 1)
    dM = delta_M(p, q)
    cycles = p.big.kernel(q - 1)
    bounds = p.big.image(q - 2)
    harmonic = harmonic_space(p.big, q - 1) if q >= 1 else Subspace.zero(hq1.dim)
    failures = []

    killed = killed & source
    comp = complement_in(killed, source, hq)

    # Restrict delta_{q,M} to `source` and keep only images that are cycles.
    sel = restrict(dM, source)
    total = sel.graph.ambient_dim
    box = Subspace.full(hq.dim).embed(0, total) + cycles.embed(hq.dim, total)
    sel = LinearRelation(sel.src, sel.dst, sel.graph & box)
    if not source <= sel.dom:
        failures.append("some vector has no image in ker d_{q-1,M}")
    if not sel.mul <= bounds:
        failures.append("image is not single-valued modulo Im d_{q-2,M}")
    if not restrict(sel, killed).ran <= bounds:
        failures.append("Im d'_{q-1} is not sent into Im d_{q-2,M}")

    def cls(v) -> Vector:
        w = project(v, harmonic, hq1)
        return harmonic.coordinates(w) if harmonic.dim else ()

    cols = []
    for u in comp.basis:
        w = sel.image_of(u)
        if w is None:
            w = dM.image_of(u)
        cols.append(cls(w) if w is not None else (Fraction(0),) * harmonic.dim)
    if extra is not None:
        if not extra <= cycles:
            failures.append("extra summand is not made of cycles")
        cols.extend(cls(v) for v in extra.basis)
    dom_dim = len(cols)
    cod_dim = harmonic.dim
    mat = RatMatrix.from_rows(cols, cod_dim).T if cols else RatMatrix.zeros(cod_dim, 0)
    from .linalg import rref
    rank = rref(mat)[1] if mat.rows and mat.cols else 0
    return QuotientMorphism(dom_dim, cod_dim, mat, not failures, rank == dom_dim, rank == cod_dim,
                            tuple(failures))


def quotient_data(p: ComplexPair, q: int, mode: str = "inclusive") -> dict[str, tuple[Subspace, Subspace]]:
    """Sources and killed subspaces of the hat/check quotients at degree ``q``."""
    hc = harmonic_complexes(p, mode)
    kP = kernel_P(p, q, mode)
    prev = hc.dPrime.get(q - 1)
    prev_b = hc.dDoublePrime.get(q - 1)
    zero = Subspace.zero(p.space(q).dim)
    im_dp = prev.ran if prev is not None else zero
    im_dpp = prev_b.ran if prev_b is not None else zero
    return {
        "hat": (kP & p.big.image(q - 1), im_dp & kP),
        "check": (kP & p.small.image(q - 1), im_dpp & kP),
    }


def quotient_morphisms(p: ComplexPair, q: int, mode: str = "inclusive") -> QuotientMorphisms:
    def make():
        data = quotient_data(p, q, mode)
        hm = curly_Hm(p, q - 1) if q >= 1 else None
        hat = _quotient_map(p, q, *data["hat"], None)
        check = _quotient_map(p, q, *data["check"], None)
        tilde = _quotient_map(p, q, *data["hat"], hm)
        bar = _quotient_map(p, q, *data["check"], hm)
        return QuotientMorphisms(hat, check, tilde, bar)
    return p.cached(("morphisms", q, mode), make)


__all__ = [
    "ComplexPair", "ExtensionError", "HarmonicComplexes", "InvalidComplexError", "MixedDeltas",
    "QuotientMorphism", "QuotientMorphisms", "build_P", "curly_Hm", "delta_M", "delta_m", "harmonic_complexes",
    "image_map_dim", "kernel_P", "make_pair", "mixed_deltas", "quotient_morphisms",
]
