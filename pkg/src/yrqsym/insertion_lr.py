"""Row insertion into SSYRT/SSRRT, lattice words and Littlewood-Richardson fillings."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from .tableaux import INF, ZERO, Filling, Kind, SkewShape

Cell = tuple[int, int]


@dataclass(frozen=True)
class InsertionResult:
    tableau: Filling
    new_cell: Cell
    bump_path: tuple[Cell, ...]
    # index of a freshly created row; rows at that index or later moved up by one
    new_row: int | None = None


def _scan_order(rows: list[list], french: bool) -> list[Cell]:
    """Cells in reading order, appended end-of-row cells included.

    Columns from the rightmost down to column 2, each read top to bottom as
    drawn.  Column 1 is never a scan target.
    """
    width = max((len(r) for r in rows), default=0) + 1
    tops = range(len(rows), 0, -1) if french else range(1, len(rows) + 1)
    return [(i, c) for c in range(width, 1, -1) for i in tops if c <= len(rows[i - 1]) + 1]


def _insert_rows(rows: list[list], x: int, french: bool):
    end = INF if french else ZERO
    order = _scan_order(rows, french)
    path: list[Cell] = []
    pos = 0
    while pos < len(order):
        i, c = order[pos]
        row = rows[i - 1]
        here = row[c - 1] if c <= len(row) else end
        left = row[c - 2]
        hit = (here >= x and left < x) if french else (here <= x and left > x)
        if hit:
            path.append((i, c))
            if here is end:
                row.append(x)
                return (i, c), path, None
            row[c - 1], x = x, here
        pos += 1
    # first-column fallback: keep column 1 monotone
    firsts = [r[0] for r in rows]
    assert all(a <= b for a, b in zip(firsts, firsts[1:])), "first column not monotone"
    # French: below the first row with F(i,1) >= x; English: after every T(i,1) <= x
    at = bisect.bisect_left(firsts, x) if french else bisect.bisect_right(firsts, x)
    rows.insert(at, [x])
    path.append((at + 1, 1))
    return (at + 1, 1), path, at + 1


def insert(t: Filling, x: int) -> InsertionResult:
    """Row insertion T <- x for a straight SSYRT or SSRRT."""
    if t.kind not in (Kind.SSYRT, Kind.SSRRT):
        raise ValueError(f"insertion needs an SSYRT or SSRRT, got {t.kind.value}")
    if not t.is_straight():
        raise ValueError("insertion needs a straight shape")
    if not isinstance(x, int) or x <= 0:
        raise ValueError(f"inserted value must be a positive integer, got {x!r}")
    rows = [list(r) for r in t.rows]
    cell, path, new_row = _insert_rows(rows, x, t.kind.french)
    out = Filling(t.kind, tuple(len(r) for r in rows), (0,) * len(rows), tuple(map(tuple, rows)))
    return InsertionResult(out, cell, tuple(path), new_row)


def insert_all(t: Filling, xs: Sequence[int]) -> Filling:
    for x in xs:
        t = insert(t, x).tableau
    return t


# ------------------------------------------------------------- double word

def double_word(s: Filling) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Pair S with the column-constant tableau of its shape.

    Columns are read left to right, each top to bottom as drawn; the top word
    holds the column index of every letter, the bottom word the entry of S.
    """
    if s.kind is not Kind.ROW_STRICT_SSYT or not s.is_straight():
        raise ValueError("double word needs a straight row-strict Young tableau")
    vals = s.values()
    top, bottom = [], []
    for j in range(1, max(s.outer, default=0) + 1):
        for i in range(len(s.outer), 0, -1):
            if (i, j) in vals:
                top.append(j)
                bottom.append(vals[(i, j)])
    return tuple(top), tuple(bottom)


@dataclass(frozen=True)
class LRWitness:
    """A filling of beta//gamma (gamma a weak composition) with content lam."""
    filling: Filling
    content: tuple[int, ...]

    @property
    def shape(self) -> SkewShape:
        return self.filling.shape

    @property
    def outer(self) -> tuple[int, ...]:
        return self.filling.outer

    @property
    def inner(self) -> tuple[int, ...]:
        return self.filling.inner

    def to_dict(self) -> dict:
        d = self.filling.to_dict()
        d["gamma"] = list(self.filling.inner)
        d["content"] = list(self.content)
        return d


def double_word_insertion(u: Filling, s: Filling, lam: Sequence[int] | None = None) -> tuple[Filling, LRWitness]:
    """Insert the bottom word of (S, S_lam) into U, recording new cells.

    Returns (V, T): V is U with every letter inserted, T marks U's cells as
    inner cells and each new cell with the paired top-word letter.
    """
    from .compositions import conjugate
    if u.kind is not Kind.SSYRT or not u.is_straight():
        raise ValueError("U must be a straight SSYRT")
    if lam is not None and tuple(s.outer) != conjugate(lam):
        raise ValueError(f"S has shape {s.outer}, expected the conjugate of {tuple(lam)}")
    top, bottom = double_word(s)
    rows = [list(r) for r in u.rows]
    # recording rows: None for cells of U, else the top-word letter
    record: list[list] = [[None] * len(r) for r in rows]
    for a, b in zip(top, bottom):
        (i, c), _, new_row = _insert_rows(rows, b, True)
        if new_row is not None:
            record.insert(new_row - 1, [a])
        else:
            record[i - 1].append(a)
    v = Filling(Kind.SSYRT, tuple(len(r) for r in rows), (), tuple(map(tuple, rows)))
    inner = tuple(sum(1 for e in r if e is None) for r in record)
    body = tuple(tuple(e for e in r if e is not None) for r in record)
    t = Filling(Kind.SSYRT, tuple(len(r) for r in record), inner, body)
    content = tuple(sorted(s.outer and conjugate(s.outer), reverse=True))
    return v, LRWitness(t, content)


# ----------------------------------------------------------- lattice words

@dataclass(frozen=True)
class LatticeFlags:
    is_lattice: bool
    is_reverse_lattice: bool
    is_regular_reverse: bool


def lattice_predicates(word: Sequence[int]) -> LatticeFlags:
    top = max(word, default=0)
    counts = [0] * (top + 2)
    lattice = reverse = True
    for w in word:
        counts[w] += 1
        if w > 1 and counts[w] > counts[w - 1]:
            lattice = False
        if w < top and counts[w + 1] < counts[w]:
            reverse = False
    # the empty word is vacuously regular, so an empty content is allowed
    regular = reverse and (not word or 1 in word)
    return LatticeFlags(lattice, reverse, regular)


def column_word(f: Filling) -> tuple[int, ...]:
    """Columns left to right, each read from the bottom of the drawing up."""
    vals = f.values()
    width = max(f.outer, default=0)
    n = len(f.outer)
    ups = range(1, n + 1) if f.kind.french else range(n, 0, -1)
    return tuple(vals[(i, j)] for j in range(1, width + 1) for i in ups if (i, j) in vals)


# ---------------------------------------------------------- A/B triples

def _triples(outer: Sequence[int], french: bool):
    """Yield (a, b, c) cells of every type A and type B triple.

    Column 0 is virtual; a triple is yielded only if its cells lie in the
    outer diagram or in column 0.
    """
    n = len(outer)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or (i > j) != french:
                continue  # need row i drawn above row j
            if outer[i - 1] >= outer[j - 1]:
                for k in range(1, outer[j - 1] + 1):
                    yield (i, k - 1), (i, k), (j, k)
            else:
                for k in range(1, outer[i - 1] + 2):
                    yield (j, k - 1), (j, k), (i, k - 1)


def _lr_check(f: Filling, content: Sequence[int] | None, reverse: bool) -> bool:
    vals = f.values()
    for r in f.rows:
        if any((a <= b) if reverse else (a >= b) for a, b in zip(r, r[1:])):
            return False
    flags = lattice_predicates(column_word(f))
    if not (flags.is_regular_reverse if reverse else flags.is_lattice):
        return False
    if content is not None:
        want = tuple(content)[::-1] if reverse else tuple(content)
        have = [0] * len(want)
        for r in f.rows:
            for v in r:
                if v > len(want):
                    return False
                have[v - 1] += 1
        if tuple(have) != want:
            return False
    # inner cells and column 0 act as a basement strictly increasing along
    # each row, below every entry (above every entry when reversed)
    width = max(f.outer, default=0)
    high = max(vals.values(), default=0) + width + 1

    def read(cell):
        if cell in vals:
            return vals[cell]
        return high - cell[1] if reverse else cell[1] - width - 1

    for cells in _triples(f.outer, f.kind.french):
        a, b, c = (read(x) for x in cells)
        ok = (c <= b < a or b < a <= c) if reverse else (a < b <= c or c <= a < b)
        if not ok:
            return False
    return True


def is_lr_skew_ssyrt(f: Filling, content: Sequence[int] | None = None) -> bool:
    """Littlewood-Richardson skew SSYRT; inner cells and column 0 read as zeros."""
    return _lr_check(f, content, reverse=False)


def is_reverse_lr(f: Filling, content: Sequence[int] | None = None) -> bool:
    """Reverse LR skew SSRRT (English); inner cells and column 0 read as infinity.

    ``content`` is lam; the filling must hold rev(lam).
    """
    return _lr_check(f, content, reverse=True)


# ------------------------------------------------------------- enumeration

def zero_placements(alpha: Sequence[int], beta: Sequence[int]):
    """Weak compositions gamma with gamma+ = alpha fitting row by row in beta."""
    from itertools import combinations
    for rows in combinations(range(len(beta)), len(alpha)):
        if all(a <= beta[r] for a, r in zip(alpha, rows)):
            gamma = [0] * len(beta)
            for a, r in zip(alpha, rows):
                gamma[r] = a
            yield tuple(gamma)


def _lr_fillings(beta, gamma, lam, reverse: bool):
    kind = Kind.SSRRT if reverse else Kind.SSYRT
    n = len(beta)
    ups = range(n, 0, -1) if reverse else range(1, n + 1)
    order = [(i, j) for j in range(1, max(beta, default=0) + 1) for i in ups
             if gamma[i - 1] < j <= beta[i - 1]]
    m = len(lam)
    want = tuple(lam)[::-1] if reverse else tuple(lam)
    if len(order) != sum(want):
        return
    counts = [0] * (m + 2)
    vals: dict[Cell, int] = {}

    def lattice_ok(v):
        if reverse:
            return v >= m or counts[v + 1] >= counts[v]
        return v <= 1 or counts[v - 1] >= counts[v]

    def rec(pos):
        if pos == len(order):
            f = Filling.from_cells(kind, beta, gamma, vals)
            if _lr_check(f, lam, reverse):
                yield f
            return
        i, j = order[pos]
        left = vals.get((i, j - 1))
        for v in range(1, m + 1):
            if counts[v] == want[v - 1]:
                continue
            if left is not None and ((left <= v) if reverse else (left >= v)):
                continue
            counts[v] += 1
            if lattice_ok(v):
                vals[(i, j)] = v
                yield from rec(pos + 1)
                del vals[(i, j)]
            counts[v] -= 1

    yield from rec(0)


def lr_witnesses(alpha, lam, beta, reverse: bool = False):
    """All LR (or reverse LR) fillings of beta/alpha with content lam."""
    for gamma in zero_placements(tuple(alpha), tuple(beta)):
        for f in _lr_fillings(tuple(beta), gamma, tuple(lam), reverse):
            yield LRWitness(f, tuple(lam))


def _candidate_outers(alpha, lam):
    from .compositions import compositions_of
    n = sum(alpha) + sum(lam)
    for beta in compositions_of(n):
        if len(alpha) <= len(beta) <= len(alpha) + sum(lam):
            yield beta


def lr_coefficient(alpha, lam, beta, reverse: bool = False) -> int:
    return sum(1 for _ in lr_witnesses(alpha, lam, beta, reverse))


def lr_coefficients(alpha, lam, reverse: bool = False) -> dict[tuple[int, ...], int]:
    """beta -> number of LR witnesses of beta/alpha with content lam.

    With reverse=True the counts are the reverse-LR numbers for the
    row-strict (English) family instead.
    """
    out = {}
    for beta in _candidate_outers(tuple(alpha), tuple(lam)):
        c = lr_coefficient(alpha, lam, beta, reverse)
        if c:
            out[beta] = c
    return out
