"""``hodge-pair`` command-line interface."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import serialize
from .complexes import cohomology, hodge_decompose, laplacian
from .floatcheck import crosscheck_backend, float_table
from .generate import ProfileError, generate_pairs, load_profile
from .pairs import KERNEL_MODES, ComplexPair
from .perversity import PerversityError, perversity_table
from .serialize import InputError, dumps
from .simplicial import (
    MeshError,
    boundary_subcomplex,
    cochain_pair,
    cone,
    explicit_boundary,
    load_complex,
    reference_cohomology,
)
from .verify import ALL_STATEMENTS, Report, format_table, parse_statements, run_suite


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    seed: int = 0
    kernel_mode: str = "inclusive"
    backend: str = "exact"
    tolerance: float = 1e-9
    statements: tuple = ALL_STATEMENTS
    output: str | None = None
    guarded: bool = False

    def __post_init__(self):
        if self.backend not in ("exact", "float"):
            raise ValueError("backend must be 'exact' or 'float'")
        if self.backend == "float" and not self.tolerance > 0:
            raise ValueError("tolerance must be positive for the float backend")
        if self.kernel_mode not in KERNEL_MODES:
            raise ValueError(f"kernel mode must be one of {KERNEL_MODES}")


def thread_count() -> int:
    raw = os.environ.get("HODGE_PAIR_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ------------------------------------------------------------------ loaders


def _load_mesh(path: str, boundary: str | None):
    """Mesh plus boundary; ``boundary`` overrides the file's own ``"boundary"`` field."""
    data = serialize.read_json(path)
    try:
        k = load_complex(data)
        choice = boundary if boundary is not None else data.get("boundary", "auto")
        if choice == "auto":
            b = boundary_subcomplex(k)
        elif choice == "none":
            b = explicit_boundary(k, [])
        elif isinstance(choice, list):
            b = explicit_boundary(k, choice)
        else:
            raise MeshError(f"boundary must be 'auto', 'none' or a simplex list, got {choice!r}", "/boundary")
    except MeshError as e:
        raise InputError(str(e), e.pointer, path) from None
    return k, b


def mesh_pair(path: str, boundary: str | None = None) -> ComplexPair:
    k, b = _load_mesh(path, boundary)
    return cochain_pair(k, b, label=Path(path).stem)


def load_reference(path: str) -> dict:
    data = serialize.read_json(path)
    if not isinstance(data, dict) or not isinstance(data.get("absolute"), list):
        raise InputError("reference needs an 'absolute' list of dimensions", "/absolute", path)
    for key in ("absolute", "relative"):
        for i, v in enumerate(data.get(key, [])):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InputError("dimensions must be nonnegative integers", f"/{key}/{i}", path)
    return {"absolute": list(data["absolute"]), "relative": list(data.get("relative", [])),
            "boundary_empty": bool(data.get("boundary_empty", False))}


def gather_pairs(args) -> list[ComplexPair]:
    pairs = []
    for path in args.input or []:
        p = serialize.load(path, serialize.parse_pair)
        p.label = Path(path).stem
        pairs.append(p)
    for path in args.mesh or []:
        pairs.append(mesh_pair(path, args.boundary))
    if getattr(args, "reference", None):
        ref = load_reference(args.reference)
        for p in pairs:
            p.reference = ref
    return pairs


# ----------------------------------------------------------------- commands


def _emit_report(report: Report, cfg: RunConfig, pairs: Sequence[ComplexPair], out) -> None:
    if cfg.backend == "float":
        for inst, p in zip(report.instances, pairs):
            approx = float_table(p, cfg.tolerance, cfg.kernel_mode)
            for row in inst.degrees:
                exact = row["dims"]
                row["dims"] = {k: approx[row["q"]][k] for k in exact}
                for k in exact:
                    if exact[k] != row["dims"][k]:
                        print(f"warning: {inst.instance_id} q={row['q']} {k}: exact {exact[k]} float "
                              f"{row['dims'][k]}", file=sys.stderr)
    if cfg.output:
        Path(cfg.output).write_text(dumps(report.to_json()))
    out.write(format_table(report))


def _config(args, command: str) -> RunConfig:
    return RunConfig(command=command, seed=getattr(args, "seed", 0) or 0, kernel_mode=args.kernel_mode,
                     backend=args.backend, tolerance=args.tol, statements=parse_statements(args.check),
                     output=args.output, guarded=args.guarded)


def cmd_pair(args, out) -> int:
    cfg = _config(args, "pair")
    pairs = gather_pairs(args)
    report = run_suite([(p.label, p) for p in pairs], cfg.statements, cfg.kernel_mode, cfg.guarded, thread_count())
    _emit_report(report, cfg, pairs, out)
    return 0


def cmd_random(args, out) -> int:
    cfg = _config(args, "random")
    try:
        profile = load_profile(args.profile)
    except ProfileError as e:
        raise InputError(str(e), "", args.profile) from None
    pairs = generate_pairs(profile, args.seed, args.count)
    report = run_suite([(p.label, p) for p in pairs], cfg.statements, cfg.kernel_mode, cfg.guarded, thread_count())
    _emit_report(report, cfg, pairs, out)
    return 0


def cmd_analyze(args, out) -> int:
    c = serialize.load(args.input, serialize.parse_complex)
    rows = []
    for q in c.degrees():
        h, harm = cohomology(c, q)
        t = hodge_decompose(c, q)
        rows.append({"q": q, "dim": c.space(q).dim, "H": h, "harmonic": harm.dim, "image_d": t.image_d.dim,
                     "image_delta": t.image_delta.dim, "kerDelta": laplacian(c, q).ker_inclusive.dim})
    keys = ["dim", "H", "harmonic", "image_d", "image_delta", "kerDelta"]
    out.write("q".rjust(3) + "".join(k.rjust(13) for k in keys) + "\n")
    for r in rows:
        out.write(str(r["q"]).rjust(3) + "".join(str(r[k]).rjust(13) for k in keys) + "\n")
    out.write("H = (" + ", ".join(str(r["H"]) for r in rows) + ")\n")
    if args.output:
        Path(args.output).write_text(dumps({"instance_id": Path(args.input).stem, "degrees": rows}))
    return 0


def _mesh_summary(path: str, k, b) -> dict:
    return {
        "instance_id": Path(path).stem,
        "simplex_counts": [k.count(q) for q in range(k.dim + 1)],
        "boundary": sorted([list(s) for s in b.simplices], key=lambda s: (len(s), s)),
        "reference_absolute": list(reference_cohomology(k)),
        "reference_relative": list(reference_cohomology(k, b)),
    }


def cmd_mesh(args, out) -> int:
    k, b = _load_mesh(args.mesh[0], args.boundary)
    info = _mesh_summary(args.mesh[0], k, b)
    p = cochain_pair(k, b)
    from .verify import is_coarse
    info["coarse_mesh"] = is_coarse(p)
    out.write(f"simplices per dimension: {info['simplex_counts']}\n")
    out.write(f"boundary simplices: {len(info['boundary'])}\n")
    out.write(f"absolute cohomology: {tuple(info['reference_absolute'])}\n")
    out.write(f"relative cohomology: {tuple(info['reference_relative'])}\n")
    if info["coarse_mesh"]:
        out.write("warning: coarse mesh (a minimal domain vanishes below the top degree)\n")
    if args.output:
        Path(args.output).write_text(dumps(info))
    return 0


def cmd_cone(args, out) -> int:
    k, _ = _load_mesh(args.mesh[0], "none")
    c = cone(k)
    mesh = {"simplices": [list(s) for s in c.simplices[c.dim]] + [
        list(s) for level in c.simplices[:-1] for s in level
        if not any(set(s) < set(t) for t in c.simplices[c.dim])]}
    out.write(f"cone: {c.vertex_count} vertices, top dimension {c.dim}\n")
    out.write(f"absolute cohomology: {reference_cohomology(c)}\n")
    text = dumps(mesh)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0


def _csv(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def cmd_perversity(args, out) -> int:
    c = _csv(args.c)
    try:
        links = [int(x) for x in _csv(args.links)]
        rows = perversity_table(c, links)
    except (ValueError, PerversityError) as e:
        raise InputError(str(e), "", "--c/--links") from None
    out.write("l".rjust(4) + "k".rjust(4) + "p_g".rjust(6) + "q_g".rjust(6) + "\n")
    for r in rows:
        if "error" in r:
            out.write(f"{r['link_dim']:>4}{r['codim']:>4}  error: {r['error']}\n")
        else:
            out.write(f"{r['link_dim']:>4}{r['codim']:>4}{r['p_g']:>6}{r['q_g']:>6}\n")
    if args.output:
        Path(args.output).write_text(dumps({"c": c, "rows": rows}))
    return 0


def cmd_crosscheck(args, out) -> int:
    pairs = gather_pairs(args)
    if args.profile:
        try:
            pairs += generate_pairs(load_profile(args.profile), args.seed, args.count)
        except ProfileError as e:
            raise InputError(str(e), "", args.profile) from None
    records = [crosscheck_backend(p, args.tol, args.kernel_mode, instance_id=p.label) for p in pairs]
    for r in records:
        status = "agree" if r.agree else "DISAGREE at degrees " + ",".join(map(str, r.degrees))
        out.write(f"{r.instance_id}: {status}\n")
        for d in r.disagreements:
            out.write(f"  q={d.q} {d.key}: exact {d.exact} float {d.approx}\n")
    if args.output:
        Path(args.output).write_text(dumps({"tolerance": args.tol, "records": [r.to_json() for r in records]}))
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodge-pair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, suite=True):
        p.add_argument("--output", help="write JSON here")
        p.add_argument("--kernel-mode", choices=KERNEL_MODES, default="inclusive")
        p.add_argument("--tol", type=float, default=1e-9, help="float pivot tolerance (relative)")
        if suite:
            p.add_argument("--check", default="all", help="'all' or comma-separated statement ids")
            p.add_argument("--backend", choices=("exact", "float"), default="exact")
            p.add_argument("--guarded", action="store_true", help="NOT_APPLICABLE when hypotheses fail")

    def sources(p):
        p.add_argument("--input", action="append", help="pair JSON file (repeatable)")
        p.add_argument("--mesh", action="append", help="mesh JSON file (repeatable)")
        p.add_argument("--boundary", help="'auto', 'none', or omit to use the mesh file's field")
        p.add_argument("--reference", help="JSON with reference 'absolute'/'relative' cohomology dims")

    p = sub.add_parser("pair", help="run the statement suite on pair or mesh files")
    sources(p)
    common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("random", help="run the suite on seeded random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", default="trivial", help="'trivial', 'restricted', 'mixed' or a JSON file")
    p.add_argument("--count", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("analyze", help="Hodge table of a single complex")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mesh", help="mesh summary: boundary and reference cohomology")
    p.add_argument("--mesh", action="append", required=True)
    p.add_argument("--boundary")
    p.add_argument("--output")
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("cone", help="cone over a mesh")
    p.add_argument("--mesh", action="append", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("perversity", help="metric perversity table")
    p.add_argument("--c", required=True, help="cone exponents c_2,...,c_m")
    p.add_argument("--links", required=True, help="link dimensions")
    p.add_argument("--output")
    p.set_defaults(func=cmd_perversity)

    p = sub.add_parser("crosscheck", help="compare exact and float dimension tables")
    sources(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile")
    p.add_argument("--count", type=int, default=10)
    common(p, suite=False)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
