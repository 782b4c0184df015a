"""File-backed columnar store for corpora and invariant values.

Layout under a root directory:

    {class}/order_{n}/graphs.g6          one canonical signature per line
    {class}/order_{n}/{invariant}.col    one value per corpus row

Column files are little-endian: the 5-byte magic "PHGC1", a u8 kind (0 numeric,
1 boolean), a u32 row count, then fixed-width rows.  Numeric rows are i64
numerator + u64 denominator, denominator 0 meaning undefined; a denominator
equal to the u64 maximum flags a length-prefixed big-integer escape that
follows the row (sign byte, u16 length and magnitude for the numerator, then
u16 length and magnitude for the denominator).  Boolean rows are one byte:
0, 1, or 2 for undefined.  Builds are deterministic, so rebuilding a corpus
is byte-identical.
"""

from __future__ import annotations

import struct
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .canon import signature
from .generate import GRAPH_CLASSES, augment, class_predicate, default_ceiling
from .graphs import Graph, from_graph6, to_graph6
from .invariants import (
    BOOLEAN,
    NUMERIC,
    REGISTRY,
    Value,
    descriptor,
    evaluate_many,
)

COLUMN_MAGIC = b"PHGC1"
KIND_CODE = {NUMERIC: 0, BOOLEAN: 1}
KIND_NAME = {0: NUMERIC, 1: BOOLEAN}
_U64_MAX = (1 << 64) - 1
_I64_MIN = -(1 << 63)
_I64_MAX = (1 << 63) - 1

NUMERIC_OPS = ("le", "ge", "eq", "lt", "gt")
BOOLEAN_OPS = ("is_true", "is_false")


class StoreError(Exception):
    """Base for store failures."""


class StoreMissingError(StoreError):
    """Corpus or column not built yet."""


class SpecError(StoreError):
    """Problem spec refers to unknown ids or mismatched kinds."""


@dataclass(frozen=True)
class Constraint:
    invariant: str
    op: str  # le | ge | eq | lt | gt | is_true | is_false
    target: Fraction | None = None

    def matches(self, value: Value) -> bool:
        if self.op == "is_true":
            return value is True
        if self.op == "is_false":
            return value is False
        if value is None:
            return False  # undefined fails every numeric comparison
        assert self.target is not None
        if self.op == "le":
            return value <= self.target
        if self.op == "ge":
            return value >= self.target
        if self.op == "eq":
            return value == self.target
        if self.op == "lt":
            return value < self.target
        if self.op == "gt":
            return value > self.target
        raise ValueError(f"unknown op {self.op!r}")


@dataclass(frozen=True)
class ProblemSpec:
    x_invariant: str
    y_invariant: str
    order: int
    graph_class: str = "all"
    constraints: tuple[Constraint, ...] = ()
    coloration: str | None = None
    highlight: tuple[str, object] | None = None  # (invariant, target value)
    extra_invariants: tuple[str, ...] = ()


def validate_spec(spec: ProblemSpec) -> None:
    """Raise SpecError on unknown invariants, bad kinds, or bad class/order."""
    if spec.graph_class not in GRAPH_CLASSES:
        raise SpecError(f"unknown graph class {spec.graph_class!r}")
    if spec.order < 1:
        raise SpecError(f"order must be positive, got {spec.order}")
    for axis_id in (spec.x_invariant, spec.y_invariant):
        d = _descriptor(axis_id)
        if d.kind != NUMERIC:
            raise SpecError(f"axis invariant {axis_id!r} must be numeric")
    for con in spec.constraints:
        d = _descriptor(con.invariant)
        if con.op in NUMERIC_OPS:
            if d.kind != NUMERIC:
                raise SpecError(f"numeric op {con.op!r} on boolean invariant {con.invariant!r}")
            if not isinstance(con.target, Fraction):
                raise SpecError(f"constraint on {con.invariant!r} needs a rational target")
        elif con.op in BOOLEAN_OPS:
            if d.kind != BOOLEAN:
                raise SpecError(f"boolean op {con.op!r} on numeric invariant {con.invariant!r}")
            if con.target is not None:
                raise SpecError("boolean constraints carry no target")
        else:
            raise SpecError(f"unknown constraint op {con.op!r}")
    if spec.coloration is not None:
        _descriptor(spec.coloration)
    if spec.highlight is not None:
        inv_id, target = spec.highlight
        d = _descriptor(inv_id)
        if d.kind == NUMERIC and not isinstance(target, Fraction):
            raise SpecError(f"highlight target for {inv_id!r} must be rational")
        if d.kind == BOOLEAN and not isinstance(target, bool):
            raise SpecError(f"highlight target for {inv_id!r} must be boolean")
    for extra in spec.extra_invariants:
        _descriptor(extra)


def _descriptor(inv_id: str):
    try:
        return descriptor(inv_id)
    except KeyError:
        raise SpecError(f"unknown invariant {inv_id!r}") from None


# ---------------------------------------------------------------------------
# column codec


def write_column(path: Path, kind: str, values: Sequence[Value]) -> None:
    chunks = [COLUMN_MAGIC, struct.pack("<BI", KIND_CODE[kind], len(values))]
    if kind == BOOLEAN:
        for v in values:
            chunks.append(b"\x02" if v is None else (b"\x01" if v else b"\x00"))
    else:
        for v in values:
            if v is None:
                chunks.append(struct.pack("<qQ", 0, 0))
                continue
            assert isinstance(v, Fraction)
            num, den = v.numerator, v.denominator
            if _I64_MIN <= num <= _I64_MAX and den < _U64_MAX:
                chunks.append(struct.pack("<qQ", num, den))
            else:
                chunks.append(struct.pack("<qQ", 0, _U64_MAX))
                chunks.append(_pack_big(num, den))
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(b"".join(chunks))
    tmp.replace(path)


def _pack_big(num: int, den: int) -> bytes:
    sign = b"\x01" if num < 0 else b"\x00"
    nmag = abs(num).to_bytes((abs(num).bit_length() + 7) // 8 or 1, "little")
    dmag = den.to_bytes((den.bit_length() + 7) // 8 or 1, "little")
    if len(nmag) > 0xFFFF or len(dmag) > 0xFFFF:
        raise ValueError("value magnitude exceeds the escape format")
    return sign + struct.pack("<H", len(nmag)) + nmag + struct.pack("<H", len(dmag)) + dmag


def read_column(path: Path) -> tuple[str, list[Value]]:
    data = path.read_bytes()
    if data[:5] != COLUMN_MAGIC:
        raise StoreError(f"{path}: bad column magic")
    kind_code, count = struct.unpack_from("<BI", data, 5)
    if kind_code not in KIND_NAME:
        raise StoreError(f"{path}: unknown column kind {kind_code}")
    kind = KIND_NAME[kind_code]
    pos = 10
    values: list[Value] = []
    if kind == BOOLEAN:
        for _ in range(count):
            byte = data[pos]
            pos += 1
            if byte == 2:
                values.append(None)
            elif byte in (0, 1):
                values.append(byte == 1)
            else:
                raise StoreError(f"{path}: bad boolean byte {byte}")
    else:
        for _ in range(count):
            num, den = struct.unpack_from("<qQ", data, pos)
            pos += 16
            if den == 0:
                values.append(None)
            elif den == _U64_MAX:
                big, pos = _unpack_big(data, pos)
                values.append(big)
            else:
                values.append(Fraction(num, den))
    if pos != len(data):
        raise StoreError(f"{path}: trailing bytes")
    return kind, values


def _unpack_big(data: bytes, pos: int) -> tuple[Fraction, int]:
    sign = data[pos]
    pos += 1
    (nlen,) = struct.unpack_from("<H", data, pos)
    pos += 2
    num = int.from_bytes(data[pos : pos + nlen], "little")
    pos += nlen
    (dlen,) = struct.unpack_from("<H", data, pos)
    pos += 2
    den = int.from_bytes(data[pos : pos + dlen], "little")
    pos += dlen
    return Fraction(-num if sign else num, den), pos


# ---------------------------------------------------------------------------
# store


class Row(NamedTuple):
    index: int
    signature: str
    x: Fraction
    y: Fraction
    color: object  # value, or polytope.ABSENT when not requested
    highlight: bool | None
    extras: dict[str, Value]


@dataclass
class CorpusHandle:
    root: Path
    order: int
    graph_class: str
    _signatures: list[str] | None = field(default=None, repr=False)
    _columns: dict[str, list[Value]] = field(default_factory=dict, repr=False)

    @property
    def directory(self) -> Path:
        return self.root / self.graph_class / f"order_{self.order}"

    @property
    def corpus_path(self) -> Path:
        return self.directory / "graphs.g6"

    def signatures(self) -> list[str]:
        if self._signatures is None:
            if not self.corpus_path.exists():
                raise StoreMissingError(
                    f"corpus for order {self.order}, class {self.graph_class!r} is not built"
                )
            self._signatures = self.corpus_path.read_text("ascii").splitlines()
        return self._signatures

    @property
    def row_count(self) -> int:
        return len(self.signatures())

    def column_path(self, inv_id: str) -> Path:
        return self.directory / f"{inv_id}.col"

    def available_invariants(self) -> list[str]:
        if not self.directory.is_dir():
            return []
        return sorted(p.stem for p in self.directory.glob("*.col"))

    def column(self, inv_id: str) -> list[Value]:
        got = self._columns.get(inv_id)
        if got is not None:
            return got
        d = _descriptor(inv_id)
        path = self.column_path(inv_id)
        if not path.exists():
            raise StoreMissingError(
                f"column {inv_id!r} for order {self.order}, class {self.graph_class!r} is not built"
            )
        kind, values = read_column(path)
        if kind != d.kind:
            raise StoreError(f"{path}: kind mismatch (file says {kind}, registry says {d.kind})")
        if len(values) != self.row_count:
            raise StoreError(f"{path}: row count mismatch")
        self._columns[inv_id] = values
        return values

    def graphs(self) -> list[Graph]:
        return [from_graph6(s) for s in self.signatures()]

    def row_index(self, sig: str) -> int | None:
        sigs = self.signatures()
        i = bisect_left(sigs, sig)
        if i < len(sigs) and sigs[i] == sig:
            return i
        return None


class Store:
    def __init__(self, root: Path | str):
        self.root = Path(root)
        self._handles: dict[tuple[int, str], CorpusHandle] = {}

    def handle(self, order: int, graph_class: str = "all") -> CorpusHandle:
        if graph_class not in GRAPH_CLASSES:
            raise SpecError(f"unknown graph class {graph_class!r}")
        key = (order, graph_class)
        h = self._handles.get(key)
        if h is None:
            h = CorpusHandle(self.root, order, graph_class)
            self._handles[key] = h
        return h

    # -- building ----------------------------------------------------------

    def ensure_corpus(self, order: int, graph_class: str = "all", ceiling: int | None = None) -> CorpusHandle:
        """Enumerate and persist the corpus if absent; lower orders are cached too."""
        if ceiling is None:
            ceiling = default_ceiling()
        if not 1 <= order <= ceiling:
            raise SpecError(f"order must be in [1, {ceiling}] (raise PF_MAX_ORDER for 10)")
        handle = self.handle(order, graph_class)
        if handle.corpus_path.exists():
            return handle
        if graph_class != "all":
            base = self.ensure_corpus(order, "all", ceiling)
            keep = class_predicate(graph_class)
            graphs = [g for g in base.graphs() if keep(g)]
            _write_corpus_file(handle, [to_graph6(g) for g in graphs])
            return handle
        # build the chain of "all" corpora from the highest cached order
        level_n = 1
        level = [Graph(1, 0)]
        for k in range(order, 0, -1):
            cached = self.handle(k, "all")
            if cached.corpus_path.exists():
                level_n = k
                level = cached.graphs()
                break
        if level_n == 1 and not self.handle(1, "all").corpus_path.exists():
            _write_corpus_file(self.handle(1, "all"), [to_graph6(Graph(1, 0))])
        while level_n < order:
            level = augment(level)
            level_n += 1
            _write_corpus_file(self.handle(level_n, "all"), [to_graph6(g) for g in level])
        return self.handle(order, "all")

    def build(
        self,
        order: int,
        graph_class: str = "all",
        invariants: Iterable[str] | None = None,
        ceiling: int | None = None,
    ) -> CorpusHandle:
        """Ensure the corpus exists and compute the requested invariant columns.

        Existing column files are left untouched (they are deterministic);
        pass invariants=None for the full registry.
        """
        ids = [d.id for d in REGISTRY] if invariants is None else list(invariants)
        for inv_id in ids:
            _descriptor(inv_id)
        handle = self.ensure_corpus(order, graph_class, ceiling)
        missing = [i for i in ids if not handle.column_path(i).exists()]
        if not missing:
            return handle
        columns: dict[str, list[Value]] = {i: [] for i in missing}
        for g in handle.graphs():
            values = evaluate_many(g, missing)
            for inv_id in missing:
                columns[inv_id].append(values[inv_id])
        for inv_id in missing:
            write_column(handle.column_path(inv_id), descriptor(inv_id).kind, columns[inv_id])
        handle._columns.update(columns)
        return handle

    # -- queries ------------------------------------------------------------

    def query(self, spec: ProblemSpec) -> tuple[list[Row], int]:
        """Constraint-filtered rows with axis values; drops (and counts) rows
        whose x or y is undefined."""
        from .polytope import ABSENT

        validate_spec(spec)
        handle = self.handle(spec.order, spec.graph_class)
        sigs = handle.signatures()
        xcol = handle.column(spec.x_invariant)
        ycol = handle.column(spec.y_invariant)
        concols = [(c, handle.column(c.invariant)) for c in spec.constraints]
        colorcol = handle.column(spec.coloration) if spec.coloration else None
        if spec.highlight is not None:
            hl_id, hl_target = spec.highlight
            hlcol = handle.column(hl_id)
        else:
            hl_target, hlcol = None, None
        extracols = {e: handle.column(e) for e in spec.extra_invariants}
        rows: list[Row] = []
        dropped = 0
        for i in range(len(sigs)):
            if any(not c.matches(col[i]) for c, col in concols):
                continue
            x, y = xcol[i], ycol[i]
            if x is None or y is None:
                dropped += 1
                continue
            color = colorcol[i] if colorcol is not None else ABSENT
            flag = None
            if hlcol is not None:
                flag = _value_eq(hlcol[i], hl_target)
            extras = {e: col[i] for e, col in extracols.items()}
            rows.append(Row(i, sigs[i], x, y, color, flag, extras))
        return rows, dropped

    def graphs_at(
        self, spec: ProblemSpec, coordinates: Sequence[tuple[Fraction, Fraction]]
    ) -> list[tuple[str, dict[str, Value]]]:
        """Constraint-surviving graphs at the given (x, y) coordinates, in corpus order."""
        rows, _ = self.query(spec)
        wanted = set(coordinates)
        from .polytope import ABSENT

        out = []
        for row in rows:
            if (row.x, row.y) not in wanted:
                continue
            values: dict[str, Value] = {
                spec.x_invariant: row.x,
                spec.y_invariant: row.y,
            }
            if spec.coloration is not None and row.color is not ABSENT:
                values[spec.coloration] = row.color
            values.update(row.extras)
            out.append((row.signature, values))
        return out

    def invariants_of(self, sig: str, ids: Sequence[str] | None = None) -> dict[str, Value]:
        """Invariant values for any graph6 string: from columns when the
        canonical form is in a built corpus, fresh evaluation otherwise."""
        inv_ids = [d.id for d in REGISTRY] if ids is None else list(ids)
        for inv_id in inv_ids:
            _descriptor(inv_id)
        g = from_graph6(sig)
        canonical = signature(g) if g.n else to_graph6(g)
        handle = self.handle(g.n, "all") if g.n >= 1 else None
        values: dict[str, Value] = {}
        remaining: list[str] = []
        row = None
        if handle is not None and handle.corpus_path.exists():
            row = handle.row_index(canonical)
        if row is not None:
            for inv_id in inv_ids:
                if handle.column_path(inv_id).exists():
                    values[inv_id] = handle.column(inv_id)[row]
                else:
                    remaining.append(inv_id)
        else:
            remaining = inv_ids
        if remaining:
            values.update(evaluate_many(g, remaining))
        return {i: values[i] for i in inv_ids}


def _value_eq(value: Value, target: object) -> bool:
    if value is None:
        return False
    if isinstance(value, bool) or isinstance(target, bool):
        return value is target
    return value == target


def _write_corpus_file(handle: CorpusHandle, sigs: list[str]) -> None:
    handle.directory.mkdir(parents=True, exist_ok=True)
    tmp = handle.corpus_path.with_suffix(".g6.tmp")
    with open(tmp, "w", newline="\n") as fh:
        for s in sigs:
            fh.write(s)
            fh.write("\n")
    tmp.replace(handle.corpus_path)
    handle._signatures = sigs


def graphs_with_degree_sequence(
    rows: Iterable[Row], sequence: Sequence[int]
) -> list[Row]:
    """Post-query filter on the full degree sequence (non-decreasing).

    The registry only carries degree extremes, so the sequence is read off
    the decoded graph; this matches a brute-force scan by construction and
    is how degree-based screening beyond min/max is expressed.
    """
    from .graphs import degree_sequence

    target = tuple(sorted(sequence))
    return [r for r in rows if degree_sequence(from_graph6(r.signature)) == target]
