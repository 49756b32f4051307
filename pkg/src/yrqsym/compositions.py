"""Compositions, partitions and the Young composition poset.

Compositions and partitions are plain tuples of ints; the empty tuple is the
composition of 0.  Constructors here validate and normalise, everything else
is a pure function on tuples.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

Composition = tuple[int, ...]
Partition = tuple[int, ...]

CONCAT = "concat"
NEAR_CONCAT = "near_concat"

COVERS = "covers"
STRICTLY_BELOW = "strictly_below"
INCOMPARABLE_OR_EQUAL = "incomparable_or_equal"


def composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def weak_composition(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"weak composition parts must be nonnegative: {parts}")
    return parts


def partition(parts: Iterable[int]) -> Partition:
    parts = composition(parts)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def collapse(gamma: Iterable[int]) -> Composition:
    """Drop the zero parts of a weak composition."""
    return tuple(p for p in gamma if p)


def parse(text: str) -> tuple[int, ...]:
    """Parse the text form "(1,2,1)"; "()" and "" give the empty tuple.
    A trailing comma, as in "(1,)", is allowed."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip().removesuffix(",")
    if not body:
        return ()
    return tuple(int(tok) for tok in body.split(","))


def format_composition(parts: Iterable[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


# ---------------------------------------------------------------- subsets

def comp_of_subset(subset: Iterable[int], n: int) -> Composition:
    s = sorted(set(subset))
    if n < 0 or any(not 1 <= x <= n - 1 for x in s):
        raise ValueError(f"subset {s} is not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0, *s, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def subset_of_comp(alpha: Composition) -> frozenset[int]:
    """Partial sums of all but the last part."""
    out, total = [], 0
    for p in alpha[:-1]:
        total += p
        out.append(total)
    return frozenset(out)


def complement(beta: Composition) -> Composition:
    n = sum(beta)
    if n == 0:
        return ()
    return comp_of_subset(set(range(1, n)) - subset_of_comp(beta), n)


def transpose(beta: Composition) -> Composition:
    """Reverse of the complement; the index map of the standard omega."""
    return complement(beta)[::-1]


# ---------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of n, lexicographically increasing."""
    if n == 0:
        return ((),)
    out = [comp_of_subset(s, n)
           for k in range(n)
           for s in combinations(range(1, n), k)]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically decreasing."""
    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first, *tail)
    return tuple(gen(n, n))


def rearrangements(lam: Partition) -> tuple[Composition, ...]:
    """Distinct compositions with underlying partition lam, lex increasing."""
    return tuple(a for a in compositions_of(sum(lam)) if shape(a) == tuple(lam))


# ---------------------------------------------------------- statistics

def shape(alpha: Iterable[int]) -> Partition:
    """Underlying partition: the nonzero parts sorted decreasingly."""
    return tuple(sorted((p for p in alpha if p), reverse=True))


def partition_stats(alpha: Composition) -> tuple[Partition, int, int]:
    return shape(alpha), len(alpha), sum(alpha)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(max(lam)))


def refines(beta: Composition, alpha: Composition) -> bool:
    """True iff alpha is obtained from beta by summing consecutive runs."""
    if sum(beta) != sum(alpha):
        return False
    return subset_of_comp(alpha) <= subset_of_comp(beta)


def refinements(alpha: Composition) -> Iterator[Composition]:
    n = sum(alpha)
    base = subset_of_comp(alpha)
    free = sorted(set(range(1, n)) - base)
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield comp_of_subset(base | set(extra), n)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """lam <= mu in dominance order."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of equal weight")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def order_key(alpha: Composition) -> tuple:
    """Sort key of the total order used for every transition matrix.

    Underlying partitions come lexicographically descending (a linear
    extension of dominance, dominant first); ties break lexicographically on
    the composition itself.
    """
    lam = shape(alpha)
    return tuple(-p for p in lam) + (0,), alpha


def ordered_compositions(n: int) -> list[Composition]:
    return sorted(compositions_of(n), key=order_key)


# ------------------------------------------------------------- poset L_c

def contained(alpha: Composition, beta: Composition) -> bool:
    """alpha ⊂ beta: shorter or equal length and partwise smaller."""
    return len(alpha) <= len(beta) and all(a <= b for a, b in zip(alpha, beta))


def lc_covers(alpha: Composition) -> list[Composition]:
    """Compositions covering alpha in the Young composition poset."""
    out = [alpha + (1,)]
    seen: set[int] = set()
    for j in range(len(alpha) - 1, -1, -1):
        if alpha[j] not in seen:
            out.append(alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:])
            seen.add(alpha[j])
    return out


def lc_covered_by(beta: Composition) -> list[Composition]:
    """Compositions that beta covers."""
    out = []
    if beta and beta[-1] == 1:
        out.append(beta[:-1])
    for j, p in enumerate(beta):
        if p > 1:
            cand = beta[:j] + (p - 1,) + beta[j + 1:]
            if beta in lc_covers(cand):
                out.append(cand)
    return out


def lc_leq(alpha: Composition, beta: Composition) -> bool:
    """alpha <= beta in L_c, by breadth-first search over covers."""
    if alpha == beta:
        return True
    target = sum(beta)
    if sum(alpha) >= target or not contained(alpha, beta):
        return False
    frontier = deque([alpha])
    seen = {alpha}
    while frontier:
        cur = frontier.popleft()
        for nxt in lc_covers(cur):
            if nxt == beta:
                return True
            if nxt not in seen and sum(nxt) < target and contained(nxt, beta):
                seen.add(nxt)
                frontier.append(nxt)
    return False


def lc_relation(alpha: Composition, beta: Composition) -> str:
    if sum(beta) == sum(alpha) + 1 and beta in lc_covers(alpha):
        return COVERS
    if alpha != beta and lc_leq(alpha, beta):
        return STRICTLY_BELOW
    return INCOMPARABLE_OR_EQUAL


def is_saturated_chain(chain: list[Composition]) -> bool:
    return all(b in lc_covers(a) for a, b in zip(chain, chain[1:]))


def saturated_chains(lo: Composition, hi: Composition) -> Iterator[list[Composition]]:
    """All saturated chains lo = c0 < c1 < ... < ck = hi."""
    if lo == hi:
        yield [lo]
        return
    if sum(lo) >= sum(hi):
        return
    for nxt in lc_covers(lo):
        if contained(nxt, hi):
            for tail in saturated_chains(nxt, hi):
                yield [lo, *tail]


# --------------------------------------------------------- (de)concatenation

def near_concat(beta: Composition, gamma: Composition) -> Composition:
    """beta ⊙ gamma: glue the last part of beta to the first of gamma."""
    if not beta or not gamma:
        raise ValueError("near concatenation needs two nonempty compositions")
    return beta[:-1] + (beta[-1] + gamma[0],) + gamma[1:]


def deconcatenations(alpha: Composition) -> list[tuple[Composition, Composition, str]]:
    """The |alpha|+1 ways of cutting alpha after i cells, i = 0..|alpha|."""
    out = [((), alpha, CONCAT)]
    acc = 0
    for j, p in enumerate(alpha):
        for inside in range(1, p):
            out.append((alpha[:j] + (inside,), (p - inside,) + alpha[j + 1:], NEAR_CONCAT))
        acc += p
        out.append((alpha[:j + 1], alpha[j + 1:], CONCAT))
    return out
