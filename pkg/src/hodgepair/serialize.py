"""JSON reading and writing; errors carry the file path and a JSON pointer."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complexes import HilbertComplex, InvalidComplexError
from .linalg import DimensionError, GramError, InnerProductSpace, RatMatrix, Subspace, as_rational
from .pairs import ComplexPair, ExtensionError, make_pair
from .relations import LinearRelation


class InputError(ValueError):
    """Malformed input; ``str()`` names the file and the offending JSON pointer."""

    def __init__(self, message: str, pointer: str = "", path: str | None = None):
        self.message = message
        self.pointer = pointer
        self.path = path
        super().__init__(self._render())

    def _render(self) -> str:
        where = self.path or "<input>"
        return f"{where}: {self.pointer or '/'}: {self.message}"

    def at(self, path: str) -> "InputError":
        return InputError(self.message, self.pointer, path)


def _rational(x: Any, pointer: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"expected an integer or a 'p/q' string, got {x!r}", pointer)
    try:
        return as_rational(x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse {x!r} as a rational number", pointer) from None


def _matrix(rows: Any, pointer: str, shape: tuple[int, int] | None = None) -> RatMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("expected a list of rows", pointer)
    width = shape[1] if shape else (len(rows[0]) if rows else 0)
    data = []
    for i, r in enumerate(rows):
        if len(r) != width:
            raise InputError(f"row has {len(r)} entries, expected {width}", f"{pointer}/{i}")
        data.append(tuple(_rational(x, f"{pointer}/{i}/{j}") for j, x in enumerate(r)))
    if shape and len(data) != shape[0]:
        raise InputError(f"expected {shape[0]} rows, got {len(data)}", pointer)
    return RatMatrix(len(data), width, tuple(data))


def _field(obj: Any, key: str, pointer: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing required field {key!r}", pointer)
    return obj[key]


def parse_space(obj: Any, pointer: str) -> InnerProductSpace:
    dim = _field(obj, "dim", pointer)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise InputError("'dim' must be a nonnegative integer", f"{pointer}/dim")
    if "gram" in obj:
        gram = _matrix(obj["gram"], f"{pointer}/gram", (dim, dim))
    else:
        gram = RatMatrix.identity(dim)
    try:
        return InnerProductSpace(dim, gram)
    except (GramError, DimensionError) as e:
        raise InputError(str(e), f"{pointer}/gram") from None


def parse_complex(obj: Any, pointer: str = "") -> HilbertComplex:
    spaces_raw = _field(obj, "spaces", pointer)
    diffs_raw = _field(obj, "diffs", pointer)
    if not isinstance(spaces_raw, list) or not spaces_raw:
        raise InputError("'spaces' must be a nonempty list", f"{pointer}/spaces")
    if not isinstance(diffs_raw, list):
        raise InputError("'diffs' must be a list", f"{pointer}/diffs")
    spaces = [parse_space(s, f"{pointer}/spaces/{i}") for i, s in enumerate(spaces_raw)]
    n = len(spaces) - 1
    if len(diffs_raw) not in (n, n + 1):
        raise InputError(f"expected {n} or {n + 1} differentials, got {len(diffs_raw)}", f"{pointer}/diffs")
    mats, domains = [], []
    for q, d in enumerate(diffs_raw):
        ptr = f"{pointer}/diffs/{q}"
        src = spaces[q].dim
        dst = spaces[q + 1].dim if q < n else 0
        if q < n or "matrix" in d:
            mats.append(_matrix(_field(d, "matrix", ptr), f"{ptr}/matrix", (dst, src)))
        else:
            mats.append(RatMatrix.zeros(0, src))
        if isinstance(d, dict) and d.get("domain") is not None:
            rows = _matrix(d["domain"], f"{ptr}/domain", None)
            if rows.rows and rows.cols != src:
                raise InputError(f"domain vectors must have {src} entries", f"{ptr}/domain")
            domains.append(Subspace.span(rows.data, src))
        else:
            domains.append(None)
    c = HilbertComplex.from_matrices(spaces, mats, domains)
    diag = c.validate()
    if not diag.valid:
        raise InputError(f"differentials fail the chain conditions at degree {diag.first_failure}",
                         f"{pointer}/diffs/{diag.first_failure}")
    return c


def parse_pair(obj: Any, pointer: str = "") -> ComplexPair:
    big = parse_complex(_field(obj, "big", pointer), f"{pointer}/big")
    small = parse_complex(_field(obj, "small", pointer), f"{pointer}/small")
    if big.spaces != small.spaces:
        raise InputError("'big' and 'small' must use the same spaces", f"{pointer}/small/spaces")
    try:
        return make_pair(big, small)
    except ExtensionError as e:
        raise InputError(str(e), f"{pointer}/small/diffs/{e.q}") from None
    except InvalidComplexError as e:
        raise InputError(str(e), pointer) from None


def parse_relation(obj: Any, pointer: str = "") -> LinearRelation:
    x = _field(obj, "from_dim", pointer)
    y = _field(obj, "to_dim", pointer)
    basis = _matrix(_field(obj, "graph_basis", pointer), f"{pointer}/graph_basis")
    if basis.rows and basis.cols != x + y:
        raise InputError(f"graph vectors must have {x + y} entries", f"{pointer}/graph_basis")
    return LinearRelation(InnerProductSpace.euclidean(x), InnerProductSpace.euclidean(y),
                          Subspace.span(basis.data, x + y))


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"cannot read file ({e.strerror})", "", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", "", str(path)) from None


def load(path: str | Path, parser) -> Any:
    data = read_json(path)
    try:
        return parser(data)
    except InputError as e:
        raise e.at(str(path)) from None


def complex_to_json(c: HilbertComplex, matrices: list[RatMatrix] | None = None) -> dict:
    """Inverse of :func:`parse_complex`; ``matrices`` overrides the exported maps on their domains."""
    diffs = []
    for q in c.degrees():
        d = c.d(q)
        entry: dict = {}
        if q < c.n:
            dom = d.dom
            mat = matrices[q] if matrices is not None else restrict_to_map(d)
            entry["matrix"] = mat.to_lists()
            if not dom.is_full():
                entry["domain"] = dom.to_lists()
        elif not d.dom.is_full():
            entry["domain"] = d.dom.to_lists()
        if entry:
            diffs.append(entry)
    return {"spaces": [{"dim": s.dim, "gram": s.gram.to_lists()} for s in c.spaces], "diffs": diffs}


def restrict_to_map(d: LinearRelation) -> RatMatrix:
    """A matrix agreeing with a single-valued relation on its domain (zero on the orthocomplement)."""
    from .relations import restrict, zero_map
    from .linalg import orthocomplement
    rest = orthocomplement(d.dom, d.src)
    full = LinearRelation(d.src, d.dst, d.graph + restrict(zero_map(d.src, d.dst), rest).graph)
    return full.matrix()


def pair_to_json(p: ComplexPair) -> dict:
    big = [restrict_to_map(p.big.d(q)) for q in range(p.n)]
    return {"big": complex_to_json(p.big, big), "small": complex_to_json(p.small, big)}


def dumps(obj: Any) -> str:
    """Stable JSON text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
