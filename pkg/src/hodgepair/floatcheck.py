"""Floating-point recomputation of the dimension table, for cross-validation only.

Ranks are decided by Gaussian elimination with partial pivoting; a pivot is
accepted when its magnitude exceeds ``tol`` times the largest absolute entry
of the matrix being reduced. Nothing here feeds a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pairs import ComplexPair

KEYS = ("H_M", "H_m", "kerDelta_M", "kerDelta_m", "kerP", "hPrime", "hDoublePrime", "curlyHm", "imageMap")


def f_rref(m: np.ndarray, tol: float) -> tuple[np.ndarray, int]:
    a = np.array(m, dtype=float, copy=True)
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0), 0
    scale = float(np.max(np.abs(a)))
    thresh = tol * scale
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows or scale == 0.0:
            break
        piv = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[piv, c]) <= thresh:
            a[r:, c] = 0.0
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] /= a[r, c]
        others = np.arange(rows) != r
        a[others] -= np.outer(a[others, c], a[r])
        r += 1
    return a[:r], r


def f_nullspace(m: np.ndarray, tol: float, cols: int) -> np.ndarray:
    """Basis rows of ``{x : m x = 0}``."""
    if m.shape[0] == 0:
        return np.eye(cols)
    red, rank = f_rref(m, tol)
    pivots = []
    for row in red:
        nz = np.flatnonzero(np.abs(row) > 0)
        pivots.append(int(nz[0]))
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols))
    for i, f in enumerate(free):
        out[i, f] = 1.0
        for row, p in zip(red, pivots):
            out[i, p] = -row[f]
    return out


@dataclass
class FSub:
    basis: np.ndarray  # rows
    n: int

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


@dataclass
class FloatEngine:
    tol: float

    def span(self, rows, n: int) -> FSub:
        rows = np.asarray(rows, dtype=float)
        if n == 0 or rows.size == 0:
            return self.zero(n)
        red, _ = f_rref(rows.reshape(-1, n), self.tol)
        return FSub(red, n)

    def full(self, n: int) -> FSub:
        return FSub(np.eye(n), n)

    def zero(self, n: int) -> FSub:
        return FSub(np.zeros((0, n)), n)

    def add(self, a: FSub, b: FSub) -> FSub:
        return self.span(np.vstack([a.basis, b.basis]), a.n)

    def annihilator(self, a: FSub) -> FSub:
        return FSub(f_nullspace(a.basis, self.tol, a.n), a.n)

    def meet(self, a: FSub, b: FSub) -> FSub:
        both = np.vstack([self.annihilator(a).basis, self.annihilator(b).basis])
        return self.span(f_nullspace(both, self.tol, a.n) if both.shape[0] else np.eye(a.n), a.n)

    def le(self, a: FSub, b: FSub) -> bool:
        return self.add(a, b).dim == b.dim

    def eq(self, a: FSub, b: FSub) -> bool:
        return a.dim == b.dim and self.le(a, b)

    def coords(self, a: FSub, idx) -> FSub:
        return self.span(a.basis[:, idx], len(idx))

    def embed(self, a: FSub, offset: int, total: int) -> FSub:
        out = np.zeros((a.dim, total))
        out[:, offset:offset + a.n] = a.basis
        return FSub(out, total)

    def ortho(self, a: FSub, gram: np.ndarray) -> FSub:
        return FSub(f_nullspace(a.basis @ gram, self.tol, a.n) if a.dim else np.eye(a.n), a.n)


@dataclass
class FRel:
    x: int
    y: int
    graph: FSub
    gx: np.ndarray
    gy: np.ndarray


class FloatPair:
    def __init__(self, p: ComplexPair, tol: float):
        self.e = FloatEngine(tol)
        self.n = p.n
        self.grams = [np.array([[float(v) for v in row] for row in s.gram.data]).reshape(s.dim, s.dim)
                      for s in p.big.spaces]
        self.dims = [s.dim for s in p.big.spaces]
        self.big = {q: self._rel(p.big.d(q), q) for q in range(-1, p.n + 1)}
        self.small = {q: self._rel(p.small.d(q), q) for q in range(-1, p.n + 1)}

    def gram(self, q: int) -> np.ndarray:
        return self.grams[q] if 0 <= q <= self.n else np.zeros((0, 0))

    def dim(self, q: int) -> int:
        return self.dims[q] if 0 <= q <= self.n else 0

    def _rel(self, r, q: int) -> FRel:
        n = r.graph.ambient_dim
        rows = [[float(v) for v in b] for b in r.graph.basis]
        return FRel(self.dim(q), self.dim(q + 1), self.e.span(rows, n), self.gram(q), self.gram(q + 1))

    def d(self, which: str, q: int) -> FRel:
        table = self.big if which == "M" else self.small
        if q in table:
            return table[q]
        return self.zero_map(q)

    def zero_map(self, q: int) -> FRel:
        x, y = self.dim(q), self.dim(q + 1)
        basis = np.hstack([np.eye(x), np.zeros((x, y))])
        return FRel(x, y, FSub(basis, x + y), self.gram(q), self.gram(q + 1))

    # relation calculus -------------------------------------------------
    def dom(self, t: FRel) -> FSub:
        return self.e.coords(t.graph, list(range(t.x)))

    def ran(self, t: FRel) -> FSub:
        return self.e.coords(t.graph, list(range(t.x, t.x + t.y)))

    def ker(self, t: FRel) -> FSub:
        horiz = self.e.embed(self.e.full(t.x), 0, t.x + t.y)
        return self.e.coords(self.e.meet(t.graph, horiz), list(range(t.x)))

    def adjoint(self, t: FRel) -> FRel:
        b = t.graph.basis
        rot = np.hstack([b[:, t.x:], -b[:, :t.x]]) if b.shape[0] else np.zeros((0, t.x + t.y))
        gram = np.zeros((t.x + t.y, t.x + t.y))
        gram[:t.y, :t.y] = t.gy
        gram[t.y:, t.y:] = t.gx
        return FRel(t.y, t.x, self.e.ortho(FSub(rot, t.x + t.y), gram), t.gy, t.gx)

    def compose(self, s: FRel, t: FRel) -> FRel:
        x, y, z = t.x, t.y, s.y
        tot = x + y + z
        a = self.e.add(self.e.embed(t.graph, 0, tot), self.e.embed(self.e.full(z), x + y, tot))
        b = self.e.add(self.e.embed(s.graph, x, tot), self.e.embed(self.e.full(x), 0, tot))
        m = self.e.meet(a, b)
        g = self.e.coords(m, list(range(x)) + list(range(x + y, tot)))
        return FRel(x, z, g, t.gx, s.gy)

    def plus(self, s: FRel, t: FRel) -> FRel:
        x, y = s.x, s.y
        tot = x + 2 * y
        a = self.e.add(self.e.embed(s.graph, 0, tot), self.e.embed(self.e.full(y), x + y, tot))
        tb = t.graph.basis
        trows = np.hstack([tb[:, :x], np.zeros((tb.shape[0], y)), tb[:, x:]])
        b = self.e.add(FSub(trows, tot), self.e.embed(self.e.full(y), x, tot))
        m = self.e.meet(a, b).basis
        summed = np.hstack([m[:, :x], m[:, x:x + y] + m[:, x + y:]]) if m.shape[0] else np.zeros((0, x + y))
        return FRel(x, y, self.e.span(summed, x + y), s.gx, s.gy)

    def restrict(self, t: FRel, s: FSub) -> FRel:
        tot = t.x + t.y
        box = self.e.add(self.e.embed(s, 0, tot), self.e.embed(self.e.full(t.y), t.x, tot))
        return FRel(t.x, t.y, self.e.meet(t.graph, box), t.gx, t.gy)

    # pair quantities ---------------------------------------------------
    def deltaM(self, q: int) -> FRel:
        return self.adjoint(self.d("m", q - 1))

    def deltam(self, q: int) -> FRel:
        return self.adjoint(self.d("M", q - 1))

    def laplacian(self, which: str, q: int) -> FRel:
        delta = lambda k: self.adjoint(self.d(which, k - 1))
        down = self.compose(self.d(which, q - 1), delta(q))
        up = self.compose(delta(q + 1), self.d(which, q))
        return self.restrict(self.plus(down, up), self.e.meet(self.dom(up), self.dom(down)))

    def P(self, q: int) -> FRel:
        down = self.compose(self.d("M", q - 1), self.deltaM(q))
        up = self.compose(self.deltaM(q + 1), self.d("M", q))
        clause = self.e.meet(self.e.meet(self.dom(up), self.dom(down)),
                             self.e.meet(self.dom(self.d("M", q)), self.dom(self.deltaM(q))))
        return self.restrict(self.plus(down, up), clause)

    def table(self, mode: str = "inclusive") -> dict[int, dict[str, int]]:
        e = self.e
        kerP = {}
        for q in range(-1, self.n + 2):
            if 0 <= q <= self.n:
                P = self.P(q)
                k = self.ker(P)
                if mode == "strict":
                    mul = e.coords(e.meet(P.graph, e.embed(e.full(P.y), P.x, P.x + P.y)),
                                   list(range(P.x, P.x + P.y)))
                    k = k if mul.dim == 0 else e.zero(P.x)
                kerP[q] = k
            else:
                kerP[q] = e.zero(self.dim(q))
        sdom = {q: self.dom(self.d("m", q)) for q in range(-1, self.n + 2)}
        dP = {q: self.restrict(self.d("M", q), kerP[q]) for q in range(-1, self.n + 1)}
        dPP = {q: self.restrict(self.d("m", q), e.meet(kerP[q], sdom[q])) for q in range(-1, self.n + 1)}
        out = {}
        for q in range(self.n + 1):
            kM, km = self.ker(self.d("M", q)), self.ker(self.d("m", q))
            imM = self.ran(self.d("M", q - 1))
            out[q] = {
                "H_M": kM.dim - imM.dim,
                "H_m": km.dim - self.ran(self.d("m", q - 1)).dim,
                "kerDelta_M": self.ker(self.laplacian("M", q)).dim,
                "kerDelta_m": self.ker(self.laplacian("m", q)).dim,
                "kerP": kerP[q].dim,
                "hPrime": self.ker(dP[q]).dim - e.meet(self.ran(dP[q - 1]), kerP[q]).dim,
                "hDoublePrime": self.ker(dPP[q]).dim
                - e.meet(e.meet(self.ran(dPP[q - 1]), kerP[q]), sdom[q]).dim,
                "curlyHm": e.meet(km, self.ker(self.deltam(q))).dim,
                "imageMap": km.dim - e.meet(imM, km).dim,
            }
        return out


@dataclass
class Disagreement:
    q: int
    key: str
    exact: int
    approx: int

    def to_json(self) -> dict:
        return {"q": self.q, "key": self.key, "exact": self.exact, "float": self.approx}


@dataclass
class AgreementRecord:
    instance_id: str
    tolerance: float
    table: dict[int, dict[str, int]]
    disagreements: list[Disagreement]

    @property
    def agree(self) -> bool:
        return not self.disagreements

    @property
    def degrees(self) -> list[int]:
        return sorted({d.q for d in self.disagreements})

    def to_json(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "tolerance": self.tolerance,
            "agree": self.agree,
            "disagreeing_degrees": self.degrees,
            "disagreements": [d.to_json() for d in self.disagreements],
        }


def float_table(p: ComplexPair, tol: float, kernel_mode: str = "inclusive") -> dict[int, dict[str, int]]:
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    return FloatPair(p, tol).table(kernel_mode)


def crosscheck_backend(p: ComplexPair, tol: float = 1e-9, kernel_mode: str = "inclusive",
                       exact_rows: list[dict] | None = None, instance_id: str = "") -> AgreementRecord:
    """Compare the float dimension table with the exact one, listing every mismatch."""
    from .verify import dimension_table
    approx = float_table(p, tol, kernel_mode)
    exact_rows = exact_rows if exact_rows is not None else dimension_table(p, kernel_mode)
    bad = []
    for row in exact_rows:
        q = row["q"]
        for k in KEYS:
            if row["dims"][k] != approx[q][k]:
                bad.append(Disagreement(q, k, row["dims"][k], approx[q][k]))
    return AgreementRecord(instance_id or p.label, tol, approx, bad)
