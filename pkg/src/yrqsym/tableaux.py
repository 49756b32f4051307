"""Fillings of (skew) composition and partition diagrams.

Indexing is uniform for every kind: row ``i`` holds part ``i`` of the outer
shape and columns are numbered from 1 at the left.  French kinds draw row 1
at the bottom, English kinds at the top; the convention only decides which
of two rows is visually "above" and how the filling is rendered.

Inner cells and cells outside the diagram read as the symbolic sentinels
:data:`ZERO` and :data:`INF`.  French kinds use ZERO inside / INF outside,
English kinds the reverse, so the reversing bijection ``f`` swaps them.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Callable, Iterable, Iterator, Sequence

from .compositions import Composition, collapse, comp_of_subset

Cell = tuple[int, int]


@total_ordering
class _Sentinel:
    """A value below (ZERO) or above (INF) every positive integer."""

    __slots__ = ("name", "rank")

    def __init__(self, name: str, rank: int):
        self.name = name
        self.rank = rank

    def _key(self, other):
        if isinstance(other, _Sentinel):
            return other.rank
        if isinstance(other, int):
            return 0
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, _Sentinel) and other.rank == self.rank

    def __lt__(self, other):
        key = self._key(other)
        if key is NotImplemented:
            return NotImplemented
        return self.rank < key

    def __hash__(self):
        return hash(("sentinel", self.rank))

    def __repr__(self):
        return self.name


ZERO = _Sentinel("ZERO", -1)
INF = _Sentinel("INF", 1)


def is_sentinel(v) -> bool:
    return isinstance(v, _Sentinel)


class Kind(str, enum.Enum):
    SSYRT = "SSYRT"
    SSRRT = "SSRRT"
    SSRCT = "SSRCT"
    SSYCT = "SSYCT"
    SSYT = "SSYT"
    ROW_STRICT_SSYT = "RowStrictSSYT"

    @property
    def french(self) -> bool:
        return self not in (Kind.SSRRT, Kind.SSRCT)

    @property
    def composition_kind(self) -> bool:
        return self in (Kind.SSYRT, Kind.SSRRT, Kind.SSRCT, Kind.SSYCT)

    @property
    def inner_value(self):
        return ZERO if self.french else INF

    @property
    def outside_value(self):
        return INF if self.french else ZERO


def as_kind(kind) -> Kind:
    return kind if isinstance(kind, Kind) else Kind(kind)


@dataclass(frozen=True)
class SkewShape:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = tuple(int(p) for p in self.outer)
        inner = tuple(int(p) for p in self.inner)
        if len(inner) > len(outer):
            if any(inner[len(outer):]):
                raise ValueError(f"inner {inner} longer than outer {outer}")
            inner = inner[:len(outer)]
        inner = inner + (0,) * (len(outer) - len(inner))
        if any(p < 0 for p in outer) or any(p < 0 for p in inner):
            raise ValueError("shape parts must be nonnegative")
        if any(b > a for a, b in zip(outer, inner)):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[Cell]:
        return [(i, j)
                for i, (a, b) in enumerate(zip(self.outer, self.inner), start=1)
                for j in range(b + 1, a + 1)]

    def in_outer(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.outer) and 1 <= j <= self.outer[i - 1]

    def in_inner(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.inner) and 1 <= j <= self.inner[i - 1]


class StructuralError(ValueError):
    """A grid that does not match its declared shape."""


@dataclass(frozen=True)
class Filling:
    """A filling of ``outer // inner``; ``rows[i-1]`` lists the non-inner
    entries of row ``i`` from left to right."""

    kind: Kind
    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        kind = as_kind(self.kind)
        shape = SkewShape(self.outer, self.inner)
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != len(shape.outer):
            raise StructuralError(f"{len(rows)} rows for outer shape {shape.outer}")
        for i, (r, a, b) in enumerate(zip(rows, shape.outer, shape.inner), start=1):
            if len(r) != a - b:
                raise StructuralError(f"row {i} has {len(r)} entries, expected {a - b}")
            if any(not isinstance(v, int) or isinstance(v, bool) or v < 1 for v in r):
                raise StructuralError(f"row {i} has non-positive entries: {r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "outer", shape.outer)
        object.__setattr__(self, "inner", shape.inner)
        object.__setattr__(self, "rows", rows)

    # -------------------------------------------------------- construction
    @classmethod
    def from_cells(cls, kind, outer, inner, values: dict[Cell, int]) -> "Filling":
        shape = SkewShape(outer, inner)
        rows = [[values[(i, j)] for j in range(b + 1, a + 1)]
                for i, (a, b) in enumerate(zip(shape.outer, shape.inner), start=1)]
        return cls(as_kind(kind), shape.outer, shape.inner, tuple(map(tuple, rows)))

    @classmethod
    def straight(cls, kind, rows: Sequence[Sequence[int]]) -> "Filling":
        rows = tuple(tuple(r) for r in rows)
        return cls(as_kind(kind), tuple(len(r) for r in rows), (), rows)

    @classmethod
    def from_picture(cls, kind, picture: Sequence[Sequence]) -> "Filling":
        """Build from rows as drawn on the page, top row first.

        ``"*"`` marks an inner cell; inner cells must sit at the left of
        their rows.
        """
        kind = as_kind(kind)
        drawn = list(picture)
        ordered = drawn[::-1] if kind.french else drawn
        outer, inner, rows = [], [], []
        for r in ordered:
            stars = 0
            while stars < len(r) and r[stars] == "*":
                stars += 1
            entries = tuple(int(v) for v in r[stars:])
            outer.append(len(r))
            inner.append(stars)
            rows.append(entries)
        return cls(kind, tuple(outer), tuple(inner), tuple(rows))

    # -------------------------------------------------------------- access
    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> list[Cell]:
        return self.shape.cells()

    def values(self) -> dict[Cell, int]:
        return {(i, b + 1 + t): v
                for i, (r, b) in enumerate(zip(self.rows, self.inner), start=1)
                for t, v in enumerate(r)}

    def __getitem__(self, cell: Cell):
        i, j = cell
        if not (1 <= i <= len(self.outer) and 1 <= j <= self.outer[i - 1]):
            return self.kind.outside_value
        if j <= self.inner[i - 1]:
            return self.kind.inner_value
        return self.rows[i - 1][j - self.inner[i - 1] - 1]

    def is_straight(self) -> bool:
        return not any(self.inner)

    def is_standard(self) -> bool:
        entries = sorted(v for r in self.rows for v in r)
        return entries == list(range(1, len(entries) + 1))

    def content(self) -> Counter:
        return Counter(v for r in self.rows for v in r)

    def weight_vector(self, k: int | None = None) -> tuple[int, ...]:
        cnt = self.content()
        top = max(cnt, default=0)
        if k is None:
            k = top
        if top > k:
            raise ValueError(f"entry {top} exceeds variable count {k}")
        return tuple(cnt.get(v, 0) for v in range(1, k + 1))

    def relabel(self, fn: Callable[[int], int], kind=None) -> "Filling":
        return Filling(as_kind(kind or self.kind), self.outer, self.inner,
                       tuple(tuple(fn(v) for v in r) for r in self.rows))

    def above(self, i: int, j: int) -> bool:
        return row_above(self.kind, i, j)

    # -------------------------------------------------------- serialisation
    def to_dict(self) -> dict:
        return {"kind": self.kind.value,
                "outer": list(self.outer),
                "inner": list(self.inner) if any(self.inner) else [],
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "Filling":
        try:
            return cls(Kind(data["kind"]), tuple(data["outer"]),
                       tuple(data.get("inner", ())),
                       tuple(tuple(r) for r in data["rows"]))
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed tableau payload: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self, inner_mark: str = "*") -> str:
        """ASCII drawing in the kind's own convention."""
        width = max((len(str(v)) for r in self.rows for v in r), default=1)
        lines = []
        for i in range(1, len(self.outer) + 1):
            cells = [inner_mark.rjust(width)] * self.inner[i - 1]
            cells += [str(v).rjust(width) for v in self.rows[i - 1]]
            lines.append(" ".join(cells))
        if self.kind.french:
            lines.reverse()
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def row_above(kind, i: int, j: int) -> bool:
    """Whether row i is drawn above row j."""
    return i > j if as_kind(kind).french else i < j


def rows_top_to_bottom(kind, nrows: int) -> list[int]:
    rows = list(range(1, nrows + 1))
    return rows[::-1] if as_kind(kind).french else rows


# ------------------------------------------------------------------- rules
#
# A rule is (name, refs, pred): refs are cells of the filling; pred receives
# the values at refs (sentinels substituted for inner and outside cells).

Rule = tuple[str, tuple[Cell, ...], Callable[..., bool]]


def _row_pred(kind: Kind):
    return {
        Kind.SSYRT: lambda x, y: x < y,
        Kind.ROW_STRICT_SSYT: lambda x, y: x < y,
        Kind.SSYCT: lambda x, y: x <= y,
        Kind.SSYT: lambda x, y: x <= y,
        Kind.SSRRT: lambda x, y: x > y,
        Kind.SSRCT: lambda x, y: x >= y,
    }[kind]


# first column, reading (top, bottom)
_FIRST_COLUMN = {
    Kind.SSYRT: lambda top, bot: top >= bot,
    Kind.SSYCT: lambda top, bot: top > bot,
    Kind.SSRRT: lambda top, bot: top <= bot,
    Kind.SSRCT: lambda top, bot: top < bot,
}

# triple a = T(top,k), b = T(top,k+1), c = T(bottom,k+1)
_TRIPLE = {
    Kind.SSYRT: lambda a, b, c: not a < c or b <= c,
    Kind.SSRRT: lambda a, b, c: not c < a or c <= b,
    Kind.SSRCT: lambda a, b, c: not c <= a or c < b,
    Kind.SSYCT: lambda a, b, c: not a <= c or b < c,
}

# columns of Young tableaux, reading (lower row, upper row)
_COLUMN = {
    Kind.SSYT: lambda lo, hi: lo < hi,
    Kind.ROW_STRICT_SSYT: lambda lo, hi: lo <= hi,
}


def rules(kind, shape: SkewShape) -> tuple[Rule, ...]:
    return _rules(as_kind(kind), shape)


@lru_cache(maxsize=4096)
def _rules(kind: Kind, shape: SkewShape) -> tuple[Rule, ...]:
    outer = shape.outer
    nrows = len(outer)
    out: list[Rule] = []

    def is_inner(c: Cell) -> bool:
        return shape.in_inner(c)

    row_ok = _row_pred(kind)
    for i in range(1, nrows + 1):
        for j in range(2, outer[i - 1] + 1):
            if not is_inner((i, j)):
                out.append(("row", ((i, j - 1), (i, j)), row_ok))

    if kind.composition_kind:
        first = _FIRST_COLUMN[kind]
        for i in range(1, nrows):
            lo, hi = (i, 1), (i + 1, 1)
            if is_inner(lo) and is_inner(hi):
                continue
            top, bot = (hi, lo) if kind.french else (lo, hi)
            out.append(("first_column", (top, bot), first))
        triple = _TRIPLE[kind]
        for t in range(1, nrows + 1):
            for b in range(1, nrows + 1):
                if not row_above(kind, t, b):
                    continue
                for k in range(1, outer[t - 1] + 1):
                    if k + 1 > outer[b - 1]:
                        continue
                    refs = ((t, k), (t, k + 1), (b, k + 1))
                    # a triple with no free cell only constrains the shape
                    if not any(shape.in_outer(c) and not is_inner(c) for c in refs):
                        continue
                    out.append(("triple", refs, triple))
    else:
        col_ok = _COLUMN[kind]
        for i in range(1, nrows):
            for j in range(1, min(outer[i - 1], outer[i]) + 1):
                if is_inner((i, j)) and is_inner((i + 1, j)):
                    continue
                out.append(("column", ((i, j), (i + 1, j)), col_ok))
    return tuple(out)


def _probe(kind: Kind, shape: SkewShape, cell: Cell, values: dict):
    if not shape.in_outer(cell):
        return kind.outside_value
    if shape.in_inner(cell):
        return kind.inner_value
    return values[cell]


@dataclass(frozen=True)
class Violation:
    rule: str
    cells: tuple[Cell, ...]

    def __str__(self):
        return f"{self.rule} violated at {list(self.cells)}"


def validate(f: Filling) -> list[Violation]:
    """Every violated rule of the filling's kind; an empty list means valid."""
    shape = f.shape
    values = f.values()
    bad = []
    for name, refs, pred in rules(f.kind, shape):
        if not pred(*(_probe(f.kind, shape, c, values) for c in refs)):
            bad.append(Violation(name, refs))
    return bad


def is_valid(f: Filling) -> bool:
    return not validate(f)


# ------------------------------------------------------------ reading words

def standard_reading_order(kind, shape: SkewShape) -> list[Cell]:
    """Columns right to left, each top to bottom; leftmost column bottom to top."""
    kind = as_kind(kind)
    cells = set(shape.cells())
    top_down = rows_top_to_bottom(kind, len(shape.outer))
    width = max(shape.outer, default=0)
    order = []
    for j in range(width, 0, -1):
        rows = top_down if j > 1 else top_down[::-1]
        order.extend((i, j) for i in rows if (i, j) in cells)
    return order


def column_reading_order(kind, shape: SkewShape) -> list[Cell]:
    """Columns left to right, each bottom to top."""
    kind = as_kind(kind)
    cells = set(shape.cells())
    bottom_up = rows_top_to_bottom(kind, len(shape.outer))[::-1]
    width = max(shape.outer, default=0)
    return [(i, j) for j in range(1, width + 1) for i in bottom_up if (i, j) in cells]


def up_columns_order(kind, shape: SkewShape) -> list[Cell]:
    """Columns right to left, each bottom to top (row-strict Young tableaux)."""
    kind = as_kind(kind)
    cells = set(shape.cells())
    bottom_up = rows_top_to_bottom(kind, len(shape.outer))[::-1]
    width = max(shape.outer, default=0)
    return [(i, j) for j in range(width, 0, -1) for i in bottom_up if (i, j) in cells]


def reading_word(f: Filling, order: str = "standard") -> tuple[int, ...]:
    if order == "standard":
        cells = standard_reading_order(f.kind, f.shape)
    elif order == "column":
        cells = column_reading_order(f.kind, f.shape)
    else:
        raise ValueError(f"unknown reading order {order!r}")
    vals = f.values()
    return tuple(vals[c] for c in cells)


def _standardize_along(f: Filling, order: list[Cell]) -> Filling:
    vals = f.values()
    cnt = Counter(vals.values())
    offset, below = {}, 0
    for v in sorted(cnt):
        offset[v] = below
        below += cnt[v]
    seen: Counter = Counter()
    new = {}
    for c in order:
        v = vals[c]
        seen[v] += 1
        new[c] = offset[v] + seen[v]
    return Filling.from_cells(f.kind, f.outer, f.inner, new)


class UnsupportedKind(ValueError):
    pass


def standardize(f: Filling) -> Filling:
    if f.kind is Kind.SSYRT:
        return _standardize_along(f, standard_reading_order(f.kind, f.shape))
    if f.kind is Kind.ROW_STRICT_SSYT:
        return _standardize_along(f, up_columns_order(f.kind, f.shape))
    raise UnsupportedKind(f"standardization is defined for SSYRT and RowStrictSSYT, not {f.kind.value}")


# ------------------------------------------------------------------ descents

@dataclass(frozen=True)
class DescentData:
    right: frozenset[int]   # i+1 strictly right of i (reverse descent set)
    left: frozenset[int]    # i+1 strictly left of i
    n: int

    @property
    def right_comp(self) -> Composition:
        return comp_of_subset(self.right, self.n)

    @property
    def left_comp(self) -> Composition:
        return comp_of_subset(self.left, self.n)

    @property
    def weakly_left(self) -> frozenset[int]:
        return frozenset(range(1, self.n)) - self.right

    @property
    def weakly_right(self) -> frozenset[int]:
        return frozenset(range(1, self.n)) - self.left


def descent_data(f: Filling) -> DescentData:
    if not f.is_standard():
        raise ValueError("descent data needs a standard filling")
    col = {v: j for (i, j), v in f.values().items()}
    n = f.size
    right = frozenset(i for i in range(1, n) if col[i + 1] > col[i])
    left = frozenset(i for i in range(1, n) if col[i + 1] < col[i])
    return DescentData(right, left, n)


# --------------------------------------------------------------- enumeration

def _backtrack(order: list[Cell], rule_list: list[Rule], kind: Kind, shape: SkewShape,
               domain: Callable[[Cell, dict], Iterable[int]],
               accept_prefix: Callable[[Cell, int, dict], bool] | None = None) -> Iterator[dict]:
    pos = {c: t for t, c in enumerate(order)}
    at_step: list[list[Rule]] = [[] for _ in order]
    for rule in rule_list:
        free = [pos[c] for c in rule[1] if c in pos]
        if not free:
            if not rule[2](*(_probe(kind, shape, c, {}) for c in rule[1])):
                return
            continue
        at_step[max(free)].append(rule)

    values: dict[Cell, int] = {}

    def rec(t: int) -> Iterator[dict]:
        if t == len(order):
            yield dict(values)
            return
        cell = order[t]
        for v in domain(cell, values):
            if accept_prefix is not None and not accept_prefix(cell, v, values):
                continue
            values[cell] = v
            if all(pred(*(_probe(kind, shape, c, values) for c in refs))
                   for _, refs, pred in at_step[t]):
                yield from rec(t + 1)
            del values[cell]

    yield from rec(0)


def _as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(tuple(shape))


def enumerate_fillings(kind, shape, max_entry: int) -> list[Filling]:
    """All valid fillings with entries in 1..max_entry.

    Cells are filled in standard reading order with values tried in
    increasing order, so the output is sorted lexicographically by the
    entry sequence in that order.
    """
    kind = as_kind(kind)
    shape = _as_shape(shape)
    order = standard_reading_order(kind, shape)
    rng = range(1, max_entry + 1)
    out = []
    for vals in _backtrack(order, rules(kind, shape), kind, shape, lambda c, v: rng):
        out.append(Filling.from_cells(kind, shape.outer, shape.inner, vals))
    return out


def enumerate_standard(kind, shape) -> list[Filling]:
    kind = as_kind(kind)
    shape = _as_shape(shape)
    n = shape.size
    order = standard_reading_order(kind, shape)
    rng = range(1, n + 1)

    def fresh(cell, v, values):
        return v not in values.values()

    out = []
    for vals in _backtrack(order, rules(kind, shape), kind, shape, lambda c, v: rng, fresh):
        out.append(Filling.from_cells(kind, shape.outer, shape.inner, vals))
    return out


def count_fillings(kind, shape, max_entry: int) -> int:
    return len(enumerate_fillings(kind, shape, max_entry))


# ------------------------------------------------------- restrict and glue

def _trim(parts: list[int]) -> tuple[int, ...]:
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def restrict(t: Filling, i: int) -> tuple[Filling, Filling]:
    """Split a standard straight SSYRT into labels <= i and labels > i.

    The upper piece is a skew SSYRT over the lower piece's shape with i
    subtracted from every entry.
    """
    if t.kind is not Kind.SSYRT or not t.is_straight() or not t.is_standard():
        raise ValueError("restrict needs a standard straight-shape SSYRT")
    n = t.size
    if not 0 <= i <= n:
        raise ValueError(f"split point {i} outside 0..{n}")
    low_rows = [tuple(v for v in r if v <= i) for r in t.rows]
    lengths = [len(r) for r in low_rows]
    low_shape = _trim(list(lengths))
    if 0 in low_shape:
        raise ValueError("labels <= i do not form a composition shape")
    lower = Filling(Kind.SSYRT, low_shape, (), tuple(low_rows[:len(low_shape)]))
    upper = Filling(Kind.SSYRT, t.outer, tuple(lengths),
                    tuple(tuple(v - i for v in r if v > i) for r in t.rows))
    return lower, upper


def glue(lower: Filling, upper: Filling) -> Filling:
    """Union of lower with upper shifted up by |lower|."""
    inner = _trim(list(upper.inner))
    if inner != lower.outer or len(lower.outer) > len(upper.outer):
        raise ValueError(f"upper inner shape {inner} does not match lower shape {lower.outer}")
    i = lower.size
    rows = []
    for r in range(len(upper.outer)):
        below = lower.rows[r] if r < len(lower.rows) else ()
        rows.append(tuple(below) + tuple(v + i for v in upper.rows[r]))
    return Filling(Kind.SSYRT, upper.outer, (), tuple(rows))


# ---------------------------------------------------- chains in L_c

def chain_syrt(chain: Sequence[Composition]) -> Filling:
    """Standard SSYRT of chain[-1] // chain[0] from a saturated chain."""
    from .compositions import is_saturated_chain

    chain = [tuple(c) for c in chain]
    if not chain or not is_saturated_chain(chain):
        raise ValueError("not a saturated chain in the Young composition poset")
    top = chain[-1]
    values = {}
    for label, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
        a = a + (0,) * (len(b) - len(a))
        (row,) = [r for r in range(len(b)) if b[r] != a[r]]
        values[(row + 1, b[row])] = label
    return Filling.from_cells(Kind.SSYRT, top, chain[0], values)


def syrt_chain(t: Filling) -> list[Composition]:
    """Inverse of :func:`chain_syrt`."""
    if t.kind is not Kind.SSYRT or not t.is_standard():
        raise ValueError("need a standard SSYRT")
    chain = []
    for i in range(t.size + 1):
        lengths = [b + sum(1 for v in r if v <= i) for r, b in zip(t.rows, t.inner)]
        chain.append(_trim(lengths))
    return chain


def inner_composition(f: Filling) -> Composition:
    return collapse(f.inner)
