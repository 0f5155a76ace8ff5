"""Perversity arithmetic: classical families, duality and the metric perversity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .linalg import as_rational


class PerversityError(ValueError):
    pass


def bracket(x) -> int:
    """Greatest integer strictly below a positive rational ``x``."""
    x = as_rational(x)
    if x <= 0:
        raise PerversityError(f"bracket is only defined for positive numbers, got {x}")
    return x.numerator - 1 if x.denominator == 1 else math.floor(x)


@dataclass(frozen=True)
class Perversity:
    """Integer values indexed by codimension ``k >= 2``."""

    values: Mapping[int, int]

    def __call__(self, k: int) -> int:
        return self.values[k]

    @classmethod
    def from_function(cls, f: Callable[[int], int], codims: Sequence[int]) -> "Perversity":
        return cls({k: f(k) for k in codims})

    @property
    def codims(self) -> list[int]:
        return sorted(self.values)


def zero(k: int) -> int:
    return 0


def top(k: int) -> int:
    return k - 2


def upper_middle(k: int) -> int:
    return (k - 1) // 2


def lower_middle(k: int) -> int:
    return (k - 2) // 2


CLASSICAL = {"zero": zero, "top": top, "upper_middle": upper_middle, "lower_middle": lower_middle}


def classical(name: str, codims: Sequence[int]) -> Perversity:
    return Perversity.from_function(CLASSICAL[name], codims)


def dual_perversity(p: Perversity) -> Perversity:
    """``t - p`` with ``t(k) = k - 2``."""
    return Perversity({k: top(k) - v for k, v in p.values.items()})


@dataclass(frozen=True)
class PerversityCheck:
    valid: bool
    first_violation: int | None = None
    reason: str = ""


def validate_perversity(p: Perversity) -> PerversityCheck:
    """Check ``p(2) = 0`` and ``p(k) <= p(k+1) <= p(k) + 1`` over the supplied codimensions."""
    ks = p.codims
    if 2 in p.values and p(2) != 0:
        return PerversityCheck(False, 2, "p(2) must be 0")
    for k in ks:
        if k + 1 in p.values and not p(k) <= p(k + 1) <= p(k) + 1:
            return PerversityCheck(False, k + 1, f"p({k + 1}) must lie in [p({k}), p({k}) + 1]")
    return PerversityCheck(True)


def metric_perversity(c: Sequence, link_dim: int, depth: int, m: int | None = None) -> int:
    """Perversity value of a stratum with link dimension ``link_dim``.

    ``c`` lists ``(c_2, ..., c_m)``; the stratum sits at depth index ``depth``
    and uses the exponent ``c_{m - depth}``. ``m`` defaults to ``len(c) + 1``.
    """
    cs = [as_rational(x) for x in c]
    if any(x <= 0 for x in cs):
        raise PerversityError("cone exponents must be positive")
    if link_dim < 0:
        raise PerversityError("link dimension must be nonnegative")
    if link_dim == 0:
        return 0
    m = len(cs) + 1 if m is None else m
    j = m - depth
    if not 2 <= j <= len(cs) + 1:
        raise PerversityError(f"no cone exponent c_{j} (available: c_2..c_{len(cs) + 1})")
    cj = cs[j - 2]
    if link_dim % 2 == 0:
        return link_dim // 2 + bracket(1 / (2 * cj))
    return (link_dim - 1) // 2 + bracket(Fraction(1, 2) + 1 / (2 * cj))


def perversity_table(c: Sequence, links: Sequence[int]) -> list[dict]:
    """``p_g`` and ``q_g = t - p_g`` for each link dimension ``l`` (codimension ``l + 1``)."""
    m = len(c) + 1
    rows = []
    for l in links:
        depth = l + 1
        k = l + 1
        try:
            p = metric_perversity(c, l, depth, m)
        except PerversityError as e:
            rows.append({"link_dim": l, "codim": k, "error": str(e)})
            continue
        rows.append({"link_dim": l, "codim": k, "p_g": p, "q_g": top(k) - p})
    return rows
