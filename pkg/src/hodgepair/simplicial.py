"""Simplicial complexes with a boundary, and their absolute/relative cochain pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .complexes import HilbertComplex
from .linalg import InnerProductSpace, RatMatrix, Subspace, as_rational
from .pairs import ComplexPair, make_pair

Simplex = tuple[int, ...]


class MeshError(ValueError):
    def __init__(self, message: str, pointer: str = ""):
        self.pointer = pointer
        super().__init__(message)


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed simplices grouped by dimension, each list sorted."""

    simplices: tuple[tuple[Simplex, ...], ...]
    weights: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.simplices[0]) if self.simplices else 0

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def index(self, k: int) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.simplices[k])}

    def all_simplices(self) -> set[Simplex]:
        return {s for level in self.simplices for s in level}


@dataclass(frozen=True)
class BoundarySubcomplex:
    simplices: frozenset[Simplex]

    def is_empty(self) -> bool:
        return not self.simplices


def _faces(s: Simplex) -> Iterable[Simplex]:
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def _closure(simplices: Iterable[Simplex]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        out.update(_faces(s))
    return out


def _normalize(s: Sequence[int], pointer: str) -> Simplex:
    if not s or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in s):
        raise MeshError("a simplex must be a nonempty list of nonnegative integers", pointer)
    t = tuple(sorted(s))
    if len(set(t)) != len(t):
        raise MeshError(f"simplex {list(s)} repeats a vertex", pointer)
    return t


def build_complex(simplices: Iterable[Sequence[int]], weights: Mapping | None = None) -> SimplicialComplex:
    """Face closure of ``simplices``; ``weights[k]`` lists the k-simplex weights in sorted order."""
    tops = [_normalize(s, f"/simplices/{i}") for i, s in enumerate(simplices)]
    closed = _closure(tops)
    if not closed:
        raise MeshError("the complex has no simplices", "/simplices")
    dim = max(len(s) for s in closed) - 1
    levels = tuple(tuple(sorted(s for s in closed if len(s) == k + 1)) for k in range(dim + 1))
    ws = []
    weights = {int(k): v for k, v in (weights or {}).items()}
    for k in range(dim + 1):
        if k in weights:
            vals = weights[k]
            if len(vals) != len(levels[k]):
                raise MeshError(f"expected {len(levels[k])} weights in dimension {k}, got {len(vals)}",
                                f"/weights/{k}")
            w = []
            for i, x in enumerate(vals):
                try:
                    r = as_rational(x)
                except (TypeError, ValueError, ZeroDivisionError):
                    raise MeshError(f"weight {x!r} is not a rational number", f"/weights/{k}/{i}") from None
                if r <= 0:
                    raise MeshError(f"weight {x} is not positive", f"/weights/{k}/{i}")
                w.append(r)
            ws.append(tuple(w))
        else:
            ws.append((Fraction(1),) * len(levels[k]))
    extra = set(weights) - set(range(dim + 1))
    if extra:
        raise MeshError(f"weights given for missing dimension {min(extra)}", f"/weights/{min(extra)}")
    return SimplicialComplex(levels, tuple(ws))


def load_complex(data: Mapping) -> SimplicialComplex:
    """Build from parsed mesh JSON ``{"simplices": ..., "weights": ...}``."""
    if not isinstance(data, Mapping) or "simplices" not in data:
        raise MeshError("mesh must be an object with a 'simplices' list", "")
    simplices = data["simplices"]
    if not isinstance(simplices, list):
        raise MeshError("'simplices' must be a list", "/simplices")
    weights = data.get("weights")
    if weights is not None and not isinstance(weights, Mapping):
        raise MeshError("'weights' must be an object keyed by dimension", "/weights")
    return build_complex(simplices, weights)


def with_weights(k: SimplicialComplex, weights: Sequence[Sequence]) -> SimplicialComplex:
    return build_complex([s for level in k.simplices for s in level], dict(enumerate(weights)))


def boundary_subcomplex(k: SimplicialComplex) -> BoundarySubcomplex:
    """Closure of the codimension-one faces lying in exactly one top simplex."""
    d = k.dim
    if d == 0:
        return BoundarySubcomplex(frozenset())
    tops = k.simplices[d]
    covered = _closure(tops)
    if covered != k.all_simplices():
        raise MeshError(f"complex is not pure of dimension {d}")
    incidence: dict[Simplex, int] = {}
    for t in tops:
        for f in combinations(t, d):
            incidence[f] = incidence.get(f, 0) + 1
    if any(c > 2 for c in incidence.values()):
        raise MeshError("complex is not a pseudomanifold: a face lies in more than two top simplices")
    free = [f for f, c in incidence.items() if c == 1]
    return BoundarySubcomplex(frozenset(_closure(free)))


def explicit_boundary(k: SimplicialComplex, simplices: Iterable[Sequence[int]]) -> BoundarySubcomplex:
    """Face closure of a user-given list; every simplex must belong to ``k``."""
    chosen = [_normalize(s, f"/boundary/{i}") for i, s in enumerate(simplices)]
    everything = k.all_simplices()
    for i, s in enumerate(chosen):
        if s not in everything:
            raise MeshError(f"boundary simplex {list(s)} is not in the complex", f"/boundary/{i}")
    return BoundarySubcomplex(frozenset(_closure(chosen)))


def coboundary_matrix(k: SimplicialComplex, q: int) -> RatMatrix:
    """Matrix of ``C^q -> C^{q+1}``: ``(d f)(s) = sum_i (-1)^i f(s without vertex i)``."""
    rows, cols = k.count(q + 1), k.count(q)
    data = [[Fraction(0)] * cols for _ in range(rows)]
    if rows and cols:
        idx = k.index(q)
        for r, s in enumerate(k.simplices[q + 1]):
            for i in range(len(s)):
                data[r][idx[s[:i] + s[i + 1:]]] += (-1) ** i
    return RatMatrix(rows, cols, tuple(tuple(row) for row in data))


def relative_domain(k: SimplicialComplex, b: BoundarySubcomplex, q: int) -> Subspace:
    """Cochains vanishing on every boundary simplex of dimension ``q``."""
    n = k.count(q)
    keep = [i for i, s in enumerate(k.simplices[q]) if s not in b.simplices]
    rows = [tuple(Fraction(int(j == i)) for j in range(n)) for i in keep]
    return Subspace.span(rows, n)


def cochain_pair(k: SimplicialComplex, b: BoundarySubcomplex | None = None, label: str = "") -> ComplexPair:
    """Full cochains (maximal) against cochains vanishing on ``b`` (minimal)."""
    if b is None:
        b = boundary_subcomplex(k)
    spaces = [InnerProductSpace.diagonal(k.weights[q]) for q in range(k.dim + 1)]
    mats = [coboundary_matrix(k, q) for q in range(k.dim)]
    big = HilbertComplex.from_matrices(spaces, mats)
    domains = [relative_domain(k, b, q) for q in range(k.dim + 1)]
    small = HilbertComplex.from_matrices(spaces, mats, domains)
    reference = {
        "absolute": list(reference_cohomology(k)),
        "relative": list(reference_cohomology(k, b)),
        "boundary_empty": b.is_empty(),
    }
    return make_pair(big, small, reference=reference, label=label)


def cone(k: SimplicialComplex) -> SimplicialComplex:
    apex = max(v for (v,) in k.simplices[0]) + 1
    tops = [s for level in k.simplices for s in level]
    tops += [s + (apex,) for s in tops] + [(apex,)]
    return build_complex(tops)


# ------------------------------------------------------------ reference oracle


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            m[r] = [(m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) // prev for j in range(ncols)]
        prev = m[rank][c]
        rank += 1
        if rank == len(m):
            break
    return rank


def _integer_coboundary(k: SimplicialComplex, q: int, keep: list[set[Simplex]]) -> list[list[int]]:
    src = [s for s in k.simplices[q] if s in keep[q]]
    dst = [s for s in k.simplices[q + 1] if s in keep[q + 1]]
    col = {s: i for i, s in enumerate(src)}
    out = []
    for s in dst:
        row = [0] * len(src)
        for i in range(len(s)):
            f = s[:i] + s[i + 1:]
            if f in col:
                row[col[f]] += (-1) ** i
        out.append(row)
    return out


def reference_cohomology(k: SimplicialComplex, b: BoundarySubcomplex | None = None) -> tuple[int, ...]:
    """Rational cohomology dims of ``k`` (or of ``k`` relative to ``b``) from integer ranks."""
    removed = b.simplices if b is not None else frozenset()
    keep = [set(level) - removed for level in k.simplices] + [set()]
    ranks = [0] * (k.dim + 2)
    for q in range(k.dim):
        if keep[q] and keep[q + 1]:
            ranks[q] = _integer_rank(_integer_coboundary(k, q, keep))
    return tuple(len(keep[q]) - ranks[q] - (ranks[q - 1] if q > 0 else 0) for q in range(k.dim + 1))


# ------------------------------------------------------------------ fixtures

FIXTURES: dict[str, list[list[int]]] = {
    "interval1": [[0, 1]],
    "interval2": [[0, 1], [1, 2]],
    "circle": [[0, 1], [1, 2], [0, 2]],
    "triangle": [[0, 1, 2]],
    "annulus": [[0, 1, 3], [1, 3, 4], [1, 2, 4], [2, 4, 5], [0, 2, 5], [0, 3, 5]],
}


def fixture(name: str) -> SimplicialComplex:
    if name == "disk":
        return cone(fixture("circle"))
    return build_complex(FIXTURES[name])


FIXTURE_NAMES = tuple(FIXTURES) + ("disk",)
