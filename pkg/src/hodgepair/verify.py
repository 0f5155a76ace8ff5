"""Dimension identities for complex pairs, checked instance by instance.

Every statement compares two lists of dimensions. Direct sums are compared
by total dimension, so ``lhs`` and ``rhs`` agree when their sums agree. A
statement may also carry structural sub-checks (orthogonality, containments,
well-definedness of a quotient map); a single failing sub-check turns the
verdict into FAIL.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .complexes import HilbertComplex, harmonic_space, hodge_decompose, laplacian, triple_is_orthogonal
from .linalg import Subspace, orthogonal
from .pairs import (
    ComplexPair,
    build_P,
    curly_Hm,
    delta_M,
    harmonic_complexes,
    quotient_morphisms,
)


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class StatementId(str, enum.Enum):
    weak_hodge = "weak_hodge"
    strong_hodge = "strong_hodge"
    new_hodge_weak = "new_hodge_weak"
    newHodge = "newHodge"
    firststep = "firststep"
    firststep_b = "firststep_b"
    morphism_wd = "morphism_wd"
    morphism_b_wd = "morphism_b_wd"
    crucial = "crucial"
    crucial_b = "crucial_b"
    TH = "TH"
    TH_b = "TH_b"
    finiteness = "finiteness"
    rough_estimate = "rough_estimate"
    simply = "simply"
    simply_r = "simply_r"
    finiteness_rel = "finiteness_rel"
    simply_rel = "simply_rel"
    simply_s = "simply_s"
    difference = "difference"
    remark_r1 = "remark_r1"
    cdgm_absolute = "cdgm_absolute"
    cdgm_relative = "cdgm_relative"


ALL_STATEMENTS: tuple[StatementId, ...] = tuple(StatementId)


def parse_statements(ids: str | Iterable[str]) -> tuple[StatementId, ...]:
    """``"all"`` or a comma-separated list of ids, returned in registry order."""
    if isinstance(ids, str):
        if ids.strip() == "all":
            return ALL_STATEMENTS
        ids = [s.strip() for s in ids.split(",") if s.strip()]
    wanted = set()
    for s in ids:
        try:
            wanted.add(StatementId(s))
        except ValueError:
            raise ValueError(f"unknown statement {s!r}") from None
    return tuple(s for s in ALL_STATEMENTS if s in wanted)


@dataclass(frozen=True)
class VerificationResult:
    statement: StatementId
    q: int
    hypotheses_met: bool
    reasons: tuple[str, ...]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    relation: str
    verdict: Verdict
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "statement": self.statement.value,
            "q": self.q,
            "hypotheses_met": self.hypotheses_met,
            "reasons": list(self.reasons),
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "relation": self.relation,
            "verdict": self.verdict.value,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------- dimensions

DIM_KEYS = ("H_M", "H_m", "kerDelta_M", "kerDelta_m", "kerP", "hPrime", "hDoublePrime", "curlyHm", "imageMap")


class Context:
    """Lazily computed quantities of one pair under one kernel mode."""

    def __init__(self, p: ComplexPair, kernel_mode: str = "inclusive"):
        self.p = p
        self.mode = kernel_mode
        self.hc = harmonic_complexes(p, kernel_mode)
        self.n = p.n

    def _get(self, table: dict, q: int, default: int = 0):
        return table.get(q, default)

    def H_M(self, q: int) -> int:
        return _cohom(self.p.big, q)

    def H_m(self, q: int) -> int:
        return _cohom(self.p.small, q)

    def hPrime(self, q: int) -> int:
        return self.hc.hPrime.get(q, 0)

    def hDoublePrime(self, q: int) -> int:
        return self.hc.hDoublePrime.get(q, 0)

    def curlyHm(self, q: int) -> int:
        s = self.hc.curlyHm.get(q)
        return s.dim if s is not None else 0

    def imageMap(self, q: int) -> int:
        return self.hc.imageMapDim.get(q, 0)

    def kerP(self, q: int) -> int:
        s = self.hc.kerP.get(q)
        return s.dim if s is not None else 0

    def kerDelta(self, c: HilbertComplex, q: int) -> int:
        return self.p.cached(("kerDelta", id(c), q), lambda: laplacian(c, q).ker_inclusive.dim)

    def l0(self, q: int) -> bool:
        return self.hc.lemma_l0.get(q, True)

    def l0b(self, q: int) -> bool:
        return self.hc.lemma_l0b.get(q, True)

    def dense(self) -> bool:
        return all(self.p.dense(q) for q in self.p.degrees())

    def dense_degrees(self) -> list[int]:
        return [q for q in self.p.degrees() if not self.p.dense(q)]

    def row(self, q: int) -> dict[str, int]:
        return {
            "H_M": self.H_M(q),
            "H_m": self.H_m(q),
            "kerDelta_M": self.kerDelta(self.p.big, q),
            "kerDelta_m": self.kerDelta(self.p.small, q),
            "kerP": self.kerP(q),
            "hPrime": self.hPrime(q),
            "hDoublePrime": self.hDoublePrime(q),
            "curlyHm": self.curlyHm(q),
            "imageMap": self.imageMap(q),
        }


def _cohom(c: HilbertComplex, q: int) -> int:
    if not 0 <= q <= c.n:
        return 0
    return c.kernel(q).dim - c.image(q - 1).dim


def is_coarse(p: ComplexPair) -> bool:
    """Some non-top degree has a nonzero space but a zero minimal domain."""
    return any(p.space(q).dim > 0 and p.small.domain(q).is_zero() for q in range(p.n))


# ---------------------------------------------------------------- statements


@dataclass
class _Outcome:
    lhs: Sequence[int]
    rhs: Sequence[int]
    relation: str = "eq"
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    # Statement-specific trigger; failing triggers always yield NOT_APPLICABLE.
    trigger: tuple[str, bool] | None = None


def _dense_reason(ctx: Context) -> tuple[bool, list[str]]:
    bad = ctx.dense_degrees()
    ok = not bad
    reason = "minimal domains dense: true" if ok else \
        "minimal domains dense: false (degrees " + ",".join(map(str, bad)) + ")"
    return ok, ["C_M Fredholm: true", reason]


def _big_dense_reason(ctx: Context) -> tuple[bool, list[str]]:
    bad = [q for q in ctx.p.degrees() if not ctx.p.big.domain(q).is_full()]
    ok = not bad
    return ok, ["complex densely defined: " + ("true" if ok else "false")]


def _weak_hodge(ctx: Context, q: int) -> _Outcome:
    c = ctx.p.big
    t = hodge_decompose(c, q)
    return _Outcome(
        [c.space(q).dim], [t.harmonic.dim, t.image_d.dim, t.image_delta.dim],
        checks={"triple orthogonal": triple_is_orthogonal(t, c.space(q)),
                "cohomology equals harmonic dimension": ctx.H_M(q) == t.harmonic.dim})


def _strong_hodge(ctx: Context, q: int) -> _Outcome:
    c = ctx.p.big
    t = hodge_decompose(c, q)
    lap = laplacian(c, q)
    direct = (t.image_d & t.image_delta).is_zero()
    return _Outcome(
        [ctx.H_M(q)], [lap.ker_inclusive.dim],
        checks={"ker Laplacian equals harmonic space": lap.ker_inclusive == t.harmonic,
                "image of Laplacian is Im d (+) Im delta": lap.ran == t.image_d + t.image_delta and direct})


def _mixed_image(ctx: Context, q: int) -> Subspace:
    return ctx.p.big.image(q - 1) + delta_M(ctx.p, q + 1).ran


def _new_hodge_weak(ctx: Context, q: int) -> _Outcome:
    hm = curly_Hm(ctx.p, q)
    rest = _mixed_image(ctx, q)
    return _Outcome([ctx.p.space(q).dim], [hm.dim, rest.dim],
                    checks={"orthogonal summands": orthogonal(hm, rest, ctx.p.space(q))})


def _new_hodge(ctx: Context, q: int) -> _Outcome:
    ran = build_P(ctx.p, q).ran
    rest = _mixed_image(ctx, q)
    return _Outcome([ran.dim], [rest.dim], checks={"Im P equals Im d_M + Im delta_M": ran == rest})


def _firststep(ctx: Context, q: int) -> _Outcome:
    harm = harmonic_space(ctx.p.big, q)
    quot = quotient_morphisms(ctx.p, q, ctx.mode).hat.domain_dim
    return _Outcome([ctx.hPrime(q)], [harm.dim, quot],
                    checks={"harmonic space inside ker P": harm <= ctx.hc.kerP[q],
                            "chain condition at q-1": ctx.l0(q - 1)})


def _firststep_b(ctx: Context, q: int) -> _Outcome:
    harm = ctx.p.small.kernel(q) & delta_M(ctx.p, q).ker_inclusive
    quot = quotient_morphisms(ctx.p, q, ctx.mode).check.domain_dim
    return _Outcome([ctx.hDoublePrime(q)], [harm.dim, quot],
                    checks={"relative harmonic space inside ker P": harm <= ctx.hc.kerP[q],
                            "relative chain condition at q-1": ctx.l0b(q - 1)})


def _wd_outcome(m, name: str) -> _Outcome:
    out = _Outcome([], [], relation="checks", checks={f"{name} well-defined": m.well_defined})
    out.notes.extend(m.failures)
    return out


def _morphism_wd(ctx: Context, q: int) -> _Outcome:
    return _wd_outcome(quotient_morphisms(ctx.p, q, ctx.mode).hat, "hat")


def _morphism_b_wd(ctx: Context, q: int) -> _Outcome:
    return _wd_outcome(quotient_morphisms(ctx.p, q, ctx.mode).check, "check")


def _crucial_like(ctx: Context, q: int, which: str) -> _Outcome:
    ms = quotient_morphisms(ctx.p, q, ctx.mode)
    base = getattr(ms, "hat" if which == "tilde" else "check")
    m = getattr(ms, which)
    out = _Outcome([base.domain_dim, ctx.curlyHm(q - 1)], [ctx.H_M(q - 1)],
                   checks={f"{which} well-defined": m.well_defined,
                           f"{which} injective": m.injective,
                           f"{which} surjective": m.surjective})
    out.notes.extend(m.failures)
    return out


def _TH(ctx: Context, q: int) -> _Outcome:
    return _Outcome([ctx.hPrime(q), ctx.curlyHm(q - 1)], [ctx.H_M(q), ctx.H_M(q - 1)],
                    checks={"chain condition at q-1 and q": ctx.l0(q - 1) and ctx.l0(q)})


def _TH_b(ctx: Context, q: int) -> _Outcome:
    return _Outcome([ctx.hDoublePrime(q), ctx.curlyHm(q - 1)], [ctx.H_m(q), ctx.H_M(q - 1)],
                    checks={"relative chain condition at q-1 and q": ctx.l0b(q - 1) and ctx.l0b(q)})


def _claim(ctx: Context, q: int, out: _Outcome):
    holds = ctx.curlyHm(q - 1) <= ctx.imageMap(q - 1)
    if ctx.dense():
        out.checks["curlyHm bounded by image map"] = holds
    elif not holds:
        out.notes.append("curlyHm exceeds image map (not asserted: minimal domains not dense)")


def _finiteness(ctx: Context, q: int) -> _Outcome:
    top = ctx.H_M(q) + ctx.H_M(q - 1)
    out = _Outcome([ctx.hPrime(q)], [top - ctx.imageMap(q - 1), top], relation="between")
    _claim(ctx, q, out)
    return out


def _finiteness_rel(ctx: Context, q: int) -> _Outcome:
    top = ctx.H_m(q) + ctx.H_M(q - 1)
    out = _Outcome([ctx.hDoublePrime(q)], [top - ctx.imageMap(q - 1), top], relation="between")
    _claim(ctx, q, out)
    return out


def _rough_estimate(ctx: Context, q: int) -> _Outcome:
    return _Outcome([ctx.H_M(q)], [ctx.hPrime(q)], relation="le")


def _simply(ctx: Context, q: int) -> _Outcome:
    trig = ctx.curlyHm(q - 1) == 0 or ctx.imageMap(q - 1) == 0
    return _Outcome([ctx.hPrime(q)], [ctx.H_M(q), ctx.H_M(q - 1)],
                    trigger=("curlyHm or image map vanishes in degree q-1", trig))


def _simply_r(ctx: Context, q: int) -> _Outcome:
    trig = ctx.H_m(q - 1) == 0 or ctx.H_M(q - 1) == 0
    return _Outcome([ctx.hPrime(q)], [ctx.H_M(q), ctx.H_M(q - 1)],
                    trigger=("H_m or H_M vanishes in degree q-1", trig))


def _simply_rel(ctx: Context, q: int) -> _Outcome:
    trig = ctx.curlyHm(q - 1) == 0 or ctx.imageMap(q - 1) == 0
    return _Outcome([ctx.hDoublePrime(q)], [ctx.H_m(q), ctx.H_M(q - 1)],
                    trigger=("curlyHm or image map vanishes in degree q-1", trig))


def _simply_s(ctx: Context, q: int) -> _Outcome:
    trig = ctx.H_m(q - 1) == 0 or ctx.H_M(q - 1) == 0
    return _Outcome([ctx.hDoublePrime(q)], [ctx.H_m(q), ctx.H_M(q - 1)],
                    trigger=("H_m or H_M vanishes in degree q-1", trig))


def _difference(ctx: Context, q: int) -> _Outcome:
    return _Outcome([ctx.hPrime(q), ctx.H_m(q)], [ctx.hDoublePrime(q), ctx.H_M(q)])


def _remark_r1(ctx: Context, q: int) -> _Outcome:
    p = ctx.p
    trig = p.big.d(q) == p.small.d(q) and p.big.d(q - 1) == p.small.d(q - 1)
    return _Outcome([ctx.hPrime(q), ctx.hDoublePrime(q)], [ctx.H_M(q), ctx.H_m(q)], relation="all_equal",
                    trigger=("d_M equals d_m in degrees q-1 and q", trig))


def _reference(ctx: Context) -> tuple[bool, str]:
    ref = ctx.p.reference
    if not ref:
        return False, "reference cohomology available: false"
    if ref.get("boundary_empty", False):
        return False, "boundary nonempty: false"
    return True, "reference cohomology available: true"


def _ref(ctx: Context, key: str, q: int) -> int:
    vals = ctx.p.reference.get(key, []) if ctx.p.reference else []
    return vals[q] if 0 <= q < len(vals) else 0


def _cdgm_absolute(ctx: Context, q: int) -> _Outcome:
    ok, why = _reference(ctx)
    return _Outcome([ctx.hPrime(q)], [_ref(ctx, "absolute", q - 1), _ref(ctx, "absolute", q)], trigger=(why, ok))


def _cdgm_relative(ctx: Context, q: int) -> _Outcome:
    ok, why = _reference(ctx)
    return _Outcome([ctx.hDoublePrime(q)], [_ref(ctx, "absolute", q - 1), _ref(ctx, "relative", q)],
                    trigger=(why, ok))


@dataclass(frozen=True)
class StatementSpec:
    description: str
    compute: Callable[[Context, int], _Outcome]
    hypotheses: Callable[[Context], tuple[bool, list[str]]]


def _none(ctx: Context) -> tuple[bool, list[str]]:
    return True, []


def _fredholm(ctx: Context) -> tuple[bool, list[str]]:
    return True, ["C_M weakly Fredholm: true"]


REGISTRY: dict[StatementId, StatementSpec] = {
    StatementId.weak_hodge: StatementSpec(
        "orthogonal splitting into harmonic, exact and coexact parts", _weak_hodge, _big_dense_reason),
    StatementId.strong_hodge: StatementSpec(
        "Laplacian kernel and range match the Hodge splitting", _strong_hodge, _big_dense_reason),
    StatementId.new_hodge_weak: StatementSpec(
        "h_q = curlyHm (+) (Im d_M + Im delta_M)", _new_hodge_weak, _fredholm),
    StatementId.newHodge: StatementSpec("Im P_q = Im d_M + Im delta_M", _new_hodge, _dense_reason),
    StatementId.firststep: StatementSpec(
        "H^q(C') = harmonic space (+) quotient of exact vectors in ker P", _firststep, _dense_reason),
    StatementId.firststep_b: StatementSpec(
        "relative version of the harmonic-vector splitting", _firststep_b, _dense_reason),
    StatementId.morphism_wd: StatementSpec("delta_M induces the hat morphism", _morphism_wd, _dense_reason),
    StatementId.morphism_b_wd: StatementSpec("delta_M induces the check morphism", _morphism_b_wd, _dense_reason),
    StatementId.crucial: StatementSpec("tilde morphism is an isomorphism onto H^{q-1}(C_M)",
                                       lambda c, q: _crucial_like(c, q, "tilde"), _dense_reason),
    StatementId.crucial_b: StatementSpec("bar morphism is an isomorphism onto H^{q-1}(C_M)",
                                         lambda c, q: _crucial_like(c, q, "bar"), _dense_reason),
    StatementId.TH: StatementSpec("H^q(C') (+) curlyHm^{q-1} = H^q(C_M) (+) H^{q-1}(C_M)", _TH, _dense_reason),
    StatementId.TH_b: StatementSpec("H^q(C'') (+) curlyHm^{q-1} = H^q(C_m) (+) H^{q-1}(C_M)", _TH_b,
                                    _dense_reason),
    StatementId.finiteness: StatementSpec("two-sided bound on dim H^q(C')", _finiteness, _dense_reason),
    StatementId.rough_estimate: StatementSpec("dim H^q(C_M) <= dim H^q(C')", _rough_estimate, _dense_reason),
    StatementId.simply: StatementSpec("vanishing curlyHm^{q-1} splits H^q(C')", _simply, _dense_reason),
    StatementId.simply_r: StatementSpec("vanishing H^{q-1} splits H^q(C')", _simply_r, _dense_reason),
    StatementId.finiteness_rel: StatementSpec("two-sided bound on dim H^q(C'')", _finiteness_rel,
                                              _dense_reason),
    StatementId.simply_rel: StatementSpec("vanishing curlyHm^{q-1} splits H^q(C'')", _simply_rel,
                                          _dense_reason),
    StatementId.simply_s: StatementSpec("vanishing H^{q-1} splits H^q(C'')", _simply_s, _dense_reason),
    StatementId.difference: StatementSpec("dim H'^q - dim H''^q = dim H^q_M - dim H^q_m", _difference,
                                          _dense_reason),
    StatementId.remark_r1: StatementSpec("equal differentials collapse all four cohomologies", _remark_r1, _none),
    StatementId.cdgm_absolute: StatementSpec("H^q(C') = H^{q-1}_abs (+) H^q_abs", _cdgm_absolute, _none),
    StatementId.cdgm_relative: StatementSpec("H^q(C'') = H^{q-1}_abs (+) H^q_rel", _cdgm_relative, _none),
}


def _holds(relation: str, lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    if relation == "eq":
        return sum(lhs) == sum(rhs)
    if relation == "le":
        return sum(lhs) <= sum(rhs)
    if relation == "between":
        lo, hi = rhs
        return lo <= sum(lhs) <= hi
    if relation == "all_equal":
        return len(set(lhs) | set(rhs)) <= 1
    if relation == "checks":
        return True
    raise ValueError(relation)


def verify(statement: StatementId | str, p: ComplexPair, q: int, kernel_mode: str = "inclusive",
           guarded: bool = False, context: Context | None = None) -> VerificationResult:
    """Evaluate one statement at degree ``q``.

    With ``guarded`` set, failing standing hypotheses give NOT_APPLICABLE;
    otherwise the identity is evaluated anyway and the failed hypotheses are
    recorded. Statement-specific triggers (vanishing conditions, available
    reference data) are always guarding.
    """
    statement = StatementId(statement)
    if not 0 <= q <= p.n:
        raise IndexError(f"degree {q} outside [0, {p.n}]")
    ctx = context or Context(p, kernel_mode)
    entry = REGISTRY[statement]
    met, reasons = entry.hypotheses(ctx)
    out = entry.compute(ctx, q)
    reasons = list(reasons)
    if out.trigger is not None:
        label, fired = out.trigger
        reasons.append(label if ":" in label else f"{label}: {'true' if fired else 'false'}")
        if not fired:
            return VerificationResult(statement, q, False, tuple(reasons), tuple(out.lhs), tuple(out.rhs),
                                      out.relation, Verdict.NOT_APPLICABLE, tuple(out.notes))
    if guarded and not met:
        return VerificationResult(statement, q, False, tuple(reasons), tuple(out.lhs), tuple(out.rhs),
                                  out.relation, Verdict.NOT_APPLICABLE, tuple(out.notes))
    notes = list(out.notes) + [f"sub-check failed: {k}" for k, v in out.checks.items() if not v]
    ok = _holds(out.relation, out.lhs, out.rhs) and all(out.checks.values())
    return VerificationResult(statement, q, met, tuple(reasons), tuple(out.lhs), tuple(out.rhs), out.relation,
                              Verdict.PASS if ok else Verdict.FAIL, tuple(notes))


# ---------------------------------------------------------------- reports


@dataclass
class InstanceReport:
    instance_id: str
    degrees: list[dict]
    verdicts: list[VerificationResult]
    flags: dict

    def to_json(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "degrees": self.degrees,
            "verdicts": [v.to_json() for v in self.verdicts],
            "flags": self.flags,
        }


def dimension_table(p: ComplexPair, kernel_mode: str = "inclusive") -> list[dict]:
    ctx = Context(p, kernel_mode)
    return [{"q": q, "dims": ctx.row(q)} for q in p.degrees()]


def instance_flags(p: ComplexPair, ctx: Context) -> dict:
    return {
        "kernel_mode": ctx.mode,
        "trivial_pair": p.is_trivial(),
        "minimal_domains_dense": ctx.dense(),
        "coarse_mesh": is_coarse(p),
        "chain_condition": ctx.hc.chain_condition,
        "chain_condition_b": ctx.hc.chain_condition_b,
    }


def analyze_instance(instance_id: str, p: ComplexPair, statements: Sequence[StatementId] = ALL_STATEMENTS,
                     kernel_mode: str = "inclusive", guarded: bool = False) -> InstanceReport:
    ctx = Context(p, kernel_mode)
    degrees = [{"q": q, "dims": ctx.row(q)} for q in p.degrees()]
    verdicts = [verify(s, p, q, kernel_mode, guarded, ctx) for s in statements for q in p.degrees()]
    return InstanceReport(instance_id, degrees, verdicts, instance_flags(p, ctx))


@dataclass
class Report:
    instances: list[InstanceReport]

    def summary(self) -> dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for inst in self.instances:
            for r in inst.verdicts:
                counts[r.verdict.value] += 1
        return counts

    def to_json(self) -> dict:
        return {"instances": [i.to_json() for i in self.instances], "summary": self.summary()}


def run_suite(instances: Sequence[tuple[str, ComplexPair]] | Sequence[ComplexPair],
              statements: Iterable[StatementId | str] = ALL_STATEMENTS, kernel_mode: str = "inclusive",
              guarded: bool = False, threads: int = 1) -> Report:
    """Analyze every instance; results keep input order whatever ``threads`` is."""
    stmts = parse_statements([StatementId(s).value for s in statements])
    items = [(x if isinstance(x, tuple) else (x.label or f"instance-{i}", x)) for i, x in enumerate(instances)]

    def one(item):
        return analyze_instance(item[0], item[1], stmts, kernel_mode, guarded)

    if threads > 1 and len(items) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, items))
    else:
        results = [one(it) for it in items]
    return Report(results)


def format_table(report: Report) -> str:
    """Plain-text dimension table and verdict summary."""
    lines = []
    for inst in report.instances:
        lines.append(f"instance {inst.instance_id}")
        flags = [k for k in ("trivial_pair", "minimal_domains_dense", "coarse_mesh") if inst.flags.get(k)]
        if inst.flags.get("coarse_mesh"):
            lines.append("  warning: coarse mesh (a minimal domain vanishes below the top degree)")
        lines.append("  flags: " + (", ".join(flags) if flags else "-"))
        lines.append("  " + "q".rjust(3) + "".join(k.rjust(13) for k in DIM_KEYS))
        for row in inst.degrees:
            lines.append("  " + str(row["q"]).rjust(3) + "".join(str(row["dims"][k]).rjust(13) for k in DIM_KEYS))
        for r in inst.verdicts:
            if r.verdict is Verdict.NOT_APPLICABLE:
                continue
            lhs = "+".join(map(str, r.lhs)) or "-"
            rhs = "+".join(map(str, r.rhs)) or "-"
            hyp = "" if r.hypotheses_met else "  [hypotheses not met]"
            lines.append(f"  {r.statement.value:<15} q={r.q}  {r.verdict.value:<5} {r.relation:<9} "
                         f"lhs {lhs}  rhs {rhs}{hyp}")
    s = report.summary()
    lines.append(f"summary: PASS {s['PASS']}  FAIL {s['FAIL']}  NOT_APPLICABLE {s['NOT_APPLICABLE']}")
    return "\n".join(lines) + "\n"
