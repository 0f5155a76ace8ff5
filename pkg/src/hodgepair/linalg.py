"""Exact rational linear algebra: matrices, canonical subspaces, Gram geometry.

Scalars are :class:`fractions.Fraction`. Nothing here ever rounds, so rank
decisions (and every dimension built on them) are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


class DimensionError(ValueError):
    """Operands live in spaces of incompatible dimension."""


class GramError(ValueError):
    """A Gram matrix is not symmetric positive definite."""


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    data: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError(f"matrix data does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RatMatrix":
        data = tuple(tuple(as_rational(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionError("column count required for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        z = Fraction(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RatMatrix":
        n = len(entries)
        z = Fraction(0)
        return cls(n, n, tuple(tuple(as_rational(entries[i]) if i == j else z for j in range(n))
                               for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat entries."""
        return tuple(x for r in self.data for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else
                         tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other.T.data
        return RatMatrix(self.rows, other.cols,
                         tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ot)
                               for r in self.data))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RatMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.data)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i] for i in range(self.rows) for j in range(i))

    def inverse(self) -> "RatMatrix":
        n = self.rows
        if n != self.cols:
            raise DimensionError("only square matrices are invertible")
        if n == 0:
            return self
        aug = RatMatrix(n, 2 * n, tuple(r + RatMatrix.identity(n).data[i] for i, r in enumerate(self.data)))
        red, rank, pivots = rref(aug)
        if rank < n or pivots[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix(n, n, tuple(r[n:] for r in red.data[:n]))

    def to_lists(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.data]


def rref(m: RatMatrix) -> tuple[RatMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(reduced, rank, pivots)``; ``reduced`` keeps the shape of ``m``
    with the zero rows at the bottom.
    """
    rows = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(m.rows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(m.rows, m.cols, tuple(tuple(x) for x in rows)), r, tuple(pivots)


def nullspace(m: RatMatrix) -> list[Vector]:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red.data[i][f]
        basis.append(tuple(v))
    return basis


def solve(m: RatMatrix, rhs: Sequence[Fraction]) -> Vector | None:
    """One solution of ``m x = rhs`` (free variables set to 0), or ``None``."""
    if len(rhs) != m.rows:
        raise DimensionError("right-hand side length does not match the row count")
    aug = RatMatrix(m.rows, m.cols + 1, tuple(r + (as_rational(b),) for r, b in zip(m.data, rhs)))
    red, rank, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = red.data[i][m.cols]
    return tuple(x)


@dataclass(frozen=True)
class InnerProductSpace:
    dim: int
    gram: RatMatrix

    def __post_init__(self):
        g = self.gram
        if g.shape != (self.dim, self.dim):
            raise DimensionError(f"Gram matrix of shape {g.shape} for a space of dimension {self.dim}")
        if not g.is_symmetric():
            raise GramError("Gram matrix is not symmetric")
        if not _positive_pivots(g):
            raise GramError("Gram matrix is not positive definite")

    @classmethod
    def euclidean(cls, dim: int) -> "InnerProductSpace":
        return cls(dim, RatMatrix.identity(dim))

    @classmethod
    def diagonal(cls, weights: Sequence) -> "InnerProductSpace":
        return cls(len(weights), RatMatrix.diagonal(weights))

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        gv = self.gram.apply(v)
        return sum((a * b for a, b in zip(u, gv)), Fraction(0))

    def full(self) -> "Subspace":
        return Subspace.full(self.dim)

    def zero(self) -> "Subspace":
        return Subspace.zero(self.dim)


def _positive_pivots(g: RatMatrix) -> bool:
    # Elimination without row swaps: pivot k is the ratio of leading minors
    # k+1 and k, so all pivots > 0 iff every leading principal minor > 0.
    a = [list(r) for r in g.data]
    n = g.rows
    for c in range(n):
        if a[c][c] <= 0:
            return False
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return True


def direct_sum(a: InnerProductSpace, b: InnerProductSpace) -> InnerProductSpace:
    """Product space with block-diagonal Gram."""
    n = a.dim + b.dim
    z = Fraction(0)
    rows = [tuple(r) + (z,) * b.dim for r in a.gram.data] + [(z,) * a.dim + tuple(r) for r in b.gram.data]
    return InnerProductSpace(n, RatMatrix(n, n, tuple(rows)))


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim held by its canonical RREF basis.

    Two subspaces are equal exactly when their basis tuples are identical.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [tuple(as_rational(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vs):
            raise DimensionError(f"vectors do not all have length {ambient_dim}")
        if not vs:
            return cls(ambient_dim, ())
        red, rank, _ = rref(RatMatrix(len(vs), ambient_dim, tuple(vs)))
        return cls(ambient_dim, red.data[:rank])

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RatMatrix.identity(ambient_dim).data)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> RatMatrix:
        return RatMatrix(self.dim, self.ambient_dim, self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        return (self.annihilator() + other.annihilator()).annihilator()

    def annihilator(self) -> "Subspace":
        """Euclidean orthogonal complement (coordinate dot product)."""
        if self.is_zero():
            return Subspace.full(self.ambient_dim)
        return Subspace.span(nullspace(self.matrix()), self.ambient_dim)

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        if not any(v):
            return True
        return Subspace.span(self.basis + (tuple(v),), self.ambient_dim).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains_vector(b) for b in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains_vector(v):
            raise ValueError("vector is not in the subspace")
        _, _, pivots = rref(self.matrix())
        # RREF basis: coefficient of basis row i is v at pivot column i.
        return tuple(v[p] for p in pivots)

    def coords(self, idx: Sequence[int]) -> "Subspace":
        """Image under the coordinate projection onto ``idx`` (in that order)."""
        return Subspace.span([tuple(b[i] for i in idx) for b in self.basis], len(idx))

    def image(self, m: RatMatrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise DimensionError("matrix does not act on this ambient space")
        return Subspace.span([m.apply(b) for b in self.basis], m.rows)

    def embed(self, offset: int, ambient_dim: int) -> "Subspace":
        """Place the subspace in a bigger space starting at coordinate ``offset``."""
        z = Fraction(0)
        tail = ambient_dim - offset - self.ambient_dim
        if tail < 0:
            raise DimensionError("embedding does not fit")
        return Subspace(ambient_dim, tuple((z,) * offset + b + (z,) * tail for b in self.basis))

    def to_lists(self) -> list[list[str]]:
        return [[format_rational(x) for x in b] for b in self.basis]


def subspace_sum_intersect(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    return a + b, a & b


def orthocomplement(s: Subspace, space: InnerProductSpace) -> Subspace:
    """``s``-perp with respect to the Gram inner product of ``space``."""
    if s.ambient_dim != space.dim:
        raise DimensionError(f"subspace of Q^{s.ambient_dim} in a space of dimension {space.dim}")
    if s.is_zero():
        return Subspace.full(space.dim)
    return Subspace.span(nullspace(s.matrix() @ space.gram), space.dim)


def orthogonal(a: Subspace, b: Subspace, space: InnerProductSpace) -> bool:
    """Every Gram pairing between the two bases is exactly zero."""
    return all(space.inner(u, v) == 0 for u in a.basis for v in b.basis)


def project(v: Sequence[Fraction], target: Subspace, space: InnerProductSpace) -> Vector:
    """Gram-orthogonal projection of ``v`` onto ``target``."""
    if target.is_zero():
        return (Fraction(0),) * space.dim
    b = target.matrix()
    # Solve (B G B^T) c = B G v.
    bg = b @ space.gram
    normal = bg @ b.T
    rhs = bg.apply(v)
    c = normal.inverse().apply(rhs)
    return b.T.apply(c)


def adjoint_matrix(a: RatMatrix, src: InnerProductSpace, dst: InnerProductSpace) -> RatMatrix:
    """The Gram adjoint ``src.gram^-1 a^T dst.gram`` of ``a : src -> dst``."""
    if a.shape != (dst.dim, src.dim):
        raise DimensionError(f"matrix of shape {a.shape} does not map Q^{src.dim} -> Q^{dst.dim}")
    return src.gram.inverse() @ a.T @ dst.gram
