"""Column-placement bijections between tableau families.

rho, h and phi~ share one placement rule (fill a French composition diagram
column by column, smallest entry first, each into the highest free row whose
left neighbour is strictly smaller); phi is its English mirror image.  f
reverses rows and entries.
"""

from __future__ import annotations

from typing import Sequence

from .tableaux import INF, ZERO, Filling, Kind, is_sentinel


class PlacementError(RuntimeError):
    """No admissible cell for an entry; the input was not valid."""


def _place(columns: Sequence[Sequence], french: bool) -> list[list]:
    """Return rows (1-indexed by position) of the placed diagram.

    French: first column increasing with the row index, later columns take
    entries smallest first into the highest row whose left entry is strictly
    smaller.  English mirrors both comparisons; "highest" is then the
    smallest row index.  A sentinel entry goes right of an equal sentinel.
    """
    first = sorted(columns[0]) if columns else []
    rows: list[list] = [[v] for v in first]
    n = len(rows)
    by_height = list(range(n - 1, -1, -1)) if french else list(range(n))
    for k, col in enumerate(columns[1:], start=1):
        entries = sorted(col) if french else sorted(col, reverse=True)
        taken: set[int] = set()
        for v in entries:
            spot = None
            for r in by_height:
                if r in taken or len(rows[r]) != k:
                    continue
                left = rows[r][k - 1]
                if is_sentinel(v):
                    ok = left == v
                else:
                    ok = left < v if french else left > v
                if ok:
                    spot = r
                    break
            if spot is None:
                raise PlacementError(f"no cell in column {k + 1} for entry {v!r}")
            rows[spot].append(v)
            taken.add(spot)
    return rows


def _rows_to_filling(kind: Kind, rows: list[list]) -> Filling:
    outer, inner, body = [], [], []
    for r in rows:
        stars = 0
        while stars < len(r) and is_sentinel(r[stars]):
            stars += 1
        if any(is_sentinel(v) for v in r[stars:]):
            raise PlacementError(f"sentinel after an entry in row {r}")
        outer.append(len(r))
        inner.append(stars)
        body.append(tuple(r[stars:]))
    return Filling(kind, tuple(outer), tuple(inner), tuple(body))


def _columns(f: Filling, sentinel=None) -> list[list]:
    """Column contents of f, inner cells reported as ``sentinel``."""
    width = max(f.outer, default=0)
    cols: list[list] = [[] for _ in range(width)]
    for i in range(1, len(f.outer) + 1):
        for j in range(1, f.outer[i - 1] + 1):
            v = f[(i, j)]
            if is_sentinel(v):
                v = sentinel if sentinel is not None else v
            cols[j - 1].append(v)
    return cols


def _require(f: Filling, *kinds: Kind):
    if f.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise ValueError(f"expected a {names} filling, got {f.kind.value}")


def _young_from_columns(kind: Kind, cols: list[list]) -> Filling:
    """French Young diagram whose column j holds sorted cols[j] bottom-up."""
    cols = [sorted(c) for c in cols]
    height = max((len(c) for c in cols), default=0)
    rows = []
    for i in range(height):
        rows.append([c[i] for c in cols if len(c) > i])
    return _rows_to_filling(kind, rows)


# ---------------------------------------------------------------------- rho

def rho(t: Filling) -> Filling:
    """Row-strict Young tableau of shape lam -> SSYRT with underlying shape lam."""
    _require(t, Kind.ROW_STRICT_SSYT)
    if not t.is_straight():
        raise ValueError("rho is defined on straight shapes")
    return _rows_to_filling(Kind.SSYRT, _place(_columns(t), french=True))


def rho_inverse(f: Filling) -> Filling:
    _require(f, Kind.SSYRT)
    if not f.is_straight():
        raise ValueError("rho inverse is defined on straight shapes")
    return _young_from_columns(Kind.ROW_STRICT_SSYT, _columns(f))


# ------------------------------------------------------------------------ f

_F_TARGET = {Kind.SSRRT: Kind.SSYRT, Kind.SSYRT: Kind.SSRRT,
             Kind.SSRCT: Kind.SSYCT, Kind.SSYCT: Kind.SSRCT}


def f_map(t: Filling, m: int) -> Filling:
    """Reverse the row order and send each entry e to m + 1 - e.

    Works in both directions (SSRRT <-> SSYRT, SSRCT <-> SSYCT); inner cells
    follow their rows, so skew shapes are carried along.
    """
    _require(t, *_F_TARGET)
    top = max((v for r in t.rows for v in r), default=0)
    if top > m:
        raise ValueError(f"entry {top} exceeds m = {m}")
    return Filling(_F_TARGET[t.kind], t.outer[::-1], t.inner[::-1],
                   tuple(tuple(m + 1 - v for v in r) for r in t.rows[::-1]))


f_inverse = f_map


# ------------------------------------------------------------------------ h

def transpose_young(s: Filling, kind: Kind) -> Filling:
    """Reflect a (skew) Young tableau in the main diagonal."""
    vals = s.values()
    outer = tuple(sum(1 for p in s.outer if p > j) for j in range(max(s.outer, default=0)))
    inner = tuple(sum(1 for p in s.inner if p > j) for j in range(max(s.inner, default=0)))
    return Filling.from_cells(kind, outer, inner, {(j, i): v for (i, j), v in vals.items()})


def h_map(s: Filling) -> Filling:
    """Skew SSYT of shape lam'/mu' -> skew SSYRT whose outer and inner
    shapes rearrange lam and mu.  Inner cells act as zeros."""
    _require(s, Kind.SSYT)
    r = transpose_young(s, Kind.ROW_STRICT_SSYT)
    return _rows_to_filling(Kind.SSYRT, _place(_columns(r, ZERO), french=True))


def h_inverse(u: Filling) -> Filling:
    _require(u, Kind.SSYRT)
    r = _young_from_columns(Kind.ROW_STRICT_SSYT, _columns(u, ZERO))
    return transpose_young(r, Kind.SSYT)


# --------------------------------------------------------------- phi, phi~

def _kth_entries(t: Filling, sentinel, largest: bool) -> list[list]:
    cols = _columns(t, sentinel)
    cols = [sorted(c, reverse=largest) for c in cols]
    depth = max((len(c) for c in cols), default=0)
    return [[c[k] for c in cols if len(c) > k] for k in range(depth)]


def phi(t: Filling) -> Filling:
    """SSRCT -> SSRRT; inner cells are read as infinite entries."""
    _require(t, Kind.SSRCT)
    return _rows_to_filling(Kind.SSRRT, _place(_kth_entries(t, INF, largest=True), french=False))


def phi_tilde(u: Filling) -> Filling:
    """SSYCT -> SSYRT; inner cells are read as zeros."""
    _require(u, Kind.SSYCT)
    return _rows_to_filling(Kind.SSYRT, _place(_kth_entries(u, ZERO, largest=False), french=True))
