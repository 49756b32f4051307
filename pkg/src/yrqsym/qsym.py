"""Formal integer combinations over quasisymmetric bases.

Every composition-indexed basis is turned into the fundamental basis F by
summing descent compositions of standard fillings; F goes to M by refinement
sums and M to polynomials by strictly increasing variable supports.  All
arithmetic is exact (Python ints).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .compositions import (Composition, Partition, compositions_of, complement,
                           deconcatenations, order_key, ordered_compositions,
                           rearrangements, refinements, transpose, contained)
from .tableaux import Kind, SkewShape, descent_data, enumerate_fillings, enumerate_standard

COMPOSITION_BASES = ("M", "F", "R", "RS", "S", "QS")
BASES = COMPOSITION_BASES + ("SkewR", "s")


class DecompositionError(ArithmeticError):
    """A polynomial that should have been quasisymmetric was not."""


class InconclusiveCheck(ValueError):
    """Too few variables to decide quasisymmetry faithfully."""


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v}


class QSymExpr:
    """Integer combination of basis elements of one basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def basis_element(cls, basis: str, index, coeff: int = 1) -> "QSymExpr":
        if basis == "SkewR":
            index = index if isinstance(index, SkewShape) else SkewShape(*index)
        else:
            index = tuple(index)
        return cls(basis, {index: coeff})

    def _check(self, other: "QSymExpr"):
        if self.basis != other.basis:
            raise ValueError(f"cannot combine {self.basis} and {other.basis} expressions")

    def __add__(self, other):
        self._check(other)
        out = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return type(self)(self.basis, out)

    def __neg__(self):
        return type(self)(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)(self.basis, {k: scalar * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, index) -> int:
        return self.terms.get(tuple(index) if not isinstance(index, SkewShape) else index, 0)

    def degrees(self) -> set[int]:
        out = set()
        for idx in self.terms:
            out.add(idx.size if isinstance(idx, SkewShape) else sum(idx))
        return out

    def sorted_terms(self) -> list:
        def key(item):
            idx = item[0]
            if isinstance(idx, SkewShape):
                return (idx.size, idx.outer, idx.inner)
            return (sum(idx), order_key(idx))
        return sorted(self.terms.items(), key=key)

    def __repr__(self):
        return f"QSymExpr({self.basis!r}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        from .io import format_expr
        return format_expr(self)


def SymExpr(terms: Mapping[Partition, int] | None = None) -> QSymExpr:
    return QSymExpr("s", terms)


def F(*parts) -> QSymExpr:
    return QSymExpr.basis_element("F", parts)


def M(*parts) -> QSymExpr:
    return QSymExpr.basis_element("M", parts)


def R(*parts) -> QSymExpr:
    return QSymExpr.basis_element("R", parts)


def schur(*parts) -> QSymExpr:
    return QSymExpr.basis_element("s", parts)


def skew(outer, inner) -> QSymExpr:
    return QSymExpr.basis_element("SkewR", SkewShape(tuple(outer), tuple(inner)))


@dataclass
class TensorExpr:
    """Integer combination of F_beta ⊗ F_gamma."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = _clean(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorExpr) and self.terms == other.terms

    def total(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0][0]), order_key(kv[0][0]), order_key(kv[0][1])))

    def __str__(self):
        from .io import format_tensor
        return format_tensor(self)


# ------------------------------------------------------------ polynomials

@dataclass
class MonomialPoly:
    """Polynomial in x_1..x_k with integer coefficients."""

    k: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = _clean(self.terms)
        for e in self.terms:
            if len(e) != self.k:
                raise ValueError(f"exponent vector {e} has length != {self.k}")

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.k != other.k:
            raise ValueError("variable counts differ")
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return MonomialPoly(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "MonomialPoly":
        return MonomialPoly(self.k, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.k != other.k:
            raise ValueError("variable counts differ")
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MonomialPoly(self.k, out)

    def __eq__(self, other):
        return isinstance(other, MonomialPoly) and self.k == other.k and self.terms == other.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __str__(self):
        from .io import format_poly
        return format_poly(self)


def one(k: int) -> MonomialPoly:
    return MonomialPoly(k, {(0,) * k: 1})


def reverse_variables(p: MonomialPoly) -> MonomialPoly:
    """Substitute x_i -> x_{k+1-i}."""
    return MonomialPoly(p.k, {e[::-1]: c for e, c in p.terms.items()})


def is_quasisymmetric(p: MonomialPoly, faithful: bool = False) -> bool:
    """All monomials with the same packed exponent sequence agree.

    A disagreement is always conclusive.  Agreement in fewer variables than
    the top degree only speaks for the k-variable polynomial; with
    ``faithful=True`` that case raises InconclusiveCheck instead.
    """
    classes: dict[Composition, set[int]] = defaultdict(set)
    for e, c in p.terms.items():
        classes[tuple(x for x in e if x)].add(c)
    for comp, coeffs in classes.items():
        if len(coeffs) != 1:
            return False
        supports = sum(1 for e in p.terms if tuple(x for x in e if x) == comp)
        if supports != _binom(p.k, len(comp)):
            return False
    top = max(p.degrees(), default=0)
    if faithful and p.k < top:
        raise InconclusiveCheck(f"{p.k} variables cannot certify degree {top}")
    return True


def _binom(n: int, r: int) -> int:
    from math import comb
    return comb(n, r)


@lru_cache(maxsize=None)
def _M_monomials(alpha: Composition, k: int) -> tuple:
    out = []
    for support in combinations(range(k), len(alpha)):
        e = [0] * k
        for idx, p in zip(support, alpha):
            e[idx] = p
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def _F_in_M(alpha: Composition) -> tuple:
    return tuple(refinements(alpha))


# ------------------------------------------------------------- expansions

@lru_cache(maxsize=None)
def _R_in_F(alpha: Composition) -> tuple:
    out = defaultdict(int)
    for t in enumerate_standard(Kind.SSYRT, alpha):
        out[descent_data(t).right_comp] += 1
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _skew_R_in_F(outer: Composition, inner: tuple) -> tuple:
    out = defaultdict(int)
    for t in enumerate_standard(Kind.SSYRT, SkewShape(outer, inner)):
        out[descent_data(t).right_comp] += 1
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _standard_expansion(kind: Kind, alpha: Composition, descents: str) -> tuple:
    out = defaultdict(int)
    for t in enumerate_standard(kind, alpha):
        d = descent_data(t)
        out[_comp(getattr(d, descents), d.n)] += 1
    return tuple(sorted(out.items()))


def _comp(subset, n):
    from .compositions import comp_of_subset
    return comp_of_subset(subset, n)


@lru_cache(maxsize=None)
def _schur_in_F(lam: Partition) -> tuple:
    """s_lam over standard Young tableaux; i is a descent when i+1 sits in a
    higher row (French drawing)."""
    out = defaultdict(int)
    for t in enumerate_standard(Kind.SSYT, lam):
        row = {v: i for (i, j), v in t.values().items()}
        n = t.size
        des = {i for i in range(1, n) if row[i + 1] > row[i]}
        out[_comp(des, n)] += 1
    return tuple(sorted(out.items()))


def expand_in_F(e: QSymExpr) -> QSymExpr:
    out = defaultdict(int)
    for idx, c in e.terms.items():
        if e.basis == "F":
            pieces = ((idx, 1),)
        elif e.basis == "R":
            pieces = _R_in_F(idx)
        elif e.basis == "SkewR":
            pieces = _skew_R_in_F(idx.outer, idx.inner)
        elif e.basis == "RS":
            pieces = _standard_expansion(Kind.SSRRT, idx, "left")
        elif e.basis == "S":
            pieces = _standard_expansion(Kind.SSYCT, idx, "weakly_left")
        elif e.basis == "QS":
            pieces = _standard_expansion(Kind.SSRCT, idx, "weakly_right")
        elif e.basis == "s":
            pieces = _schur_in_F(idx)
        elif e.basis == "M":
            pieces = tuple((beta, (-1) ** (len(beta) - len(idx))) for beta in refinements(idx))
        else:
            raise ValueError(f"unknown basis {e.basis!r}")
        for beta, d in pieces:
            out[beta] += c * d
    return QSymExpr("F", out)


def to_M(e: QSymExpr) -> QSymExpr:
    if e.basis == "M":
        return e
    f = e if e.basis == "F" else expand_in_F(e)
    out = defaultdict(int)
    for alpha, c in f.terms.items():
        for beta in _F_in_M(alpha):
            out[beta] += c
    return QSymExpr("M", out)


def F_from_M(e: QSymExpr) -> QSymExpr:
    """Invert F_alpha = sum over refinements beta of M_beta."""
    if e.basis != "M":
        raise ValueError("expected an M-basis expression")
    out = defaultdict(int)
    for beta, c in e.terms.items():
        # M_beta = sum_{gamma refines beta} (-1)^{l(gamma)-l(beta)} F_gamma
        for gamma in refinements(beta):
            out[gamma] += c * (-1) ** (len(gamma) - len(beta))
    return QSymExpr("F", out)


def _schur_monomials(lam: Partition, k: int, mu: Partition = ()) -> MonomialPoly:
    out = defaultdict(int)
    for t in enumerate_fillings(Kind.SSYT, SkewShape(lam, mu), k):
        out[t.weight_vector(k)] += 1
    return MonomialPoly(k, out)


def to_monomials(e: QSymExpr, k: int) -> MonomialPoly:
    if k < 0:
        raise ValueError("variable count must be nonnegative")
    if e.basis == "s":
        total = MonomialPoly(k)
        for lam, c in e.terms.items():
            total = total + _schur_monomials(lam, k).scale(c)
        return total
    out = defaultdict(int)
    for alpha, c in to_M(e).terms.items():
        if len(alpha) > k:
            continue
        for mono in _M_monomials(alpha, k):
            out[mono] += c
    return MonomialPoly(k, out)


def tableau_weights(kind, shape, k: int) -> MonomialPoly:
    """Generating function of all fillings of a shape with entries <= k."""
    out = defaultdict(int)
    for t in enumerate_fillings(kind, shape, k):
        out[t.weight_vector(k)] += 1
    return MonomialPoly(k, out)


def M_coefficients(p: MonomialPoly) -> QSymExpr:
    """Read the M-expansion of a quasisymmetric polynomial off its packed
    monomials x_1^a_1 ... x_l^a_l."""
    out = {}
    for e, c in p.terms.items():
        ell = sum(1 for x in e if x)
        if all(e[:ell]):
            out[tuple(e[:ell])] = c
    return QSymExpr("M", out)


# ------------------------------------------------------ Hopf structure on F

def coproduct(e: QSymExpr) -> TensorExpr:
    f = e if e.basis == "F" else expand_in_F(e)
    out = defaultdict(int)
    for alpha, c in f.terms.items():
        for beta, gamma, _ in deconcatenations(alpha):
            out[(beta, gamma)] += c
    return TensorExpr(out)


def coproduct_twice(e: QSymExpr, side: str) -> dict:
    """(Δ⊗id)Δ for side='left', (id⊗Δ)Δ for side='right', as triples."""
    out = defaultdict(int)
    for (beta, gamma), c in coproduct(e).terms.items():
        target = beta if side == "left" else gamma
        for (x, y), d in coproduct(QSymExpr("F", {target: 1})).terms.items():
            key = (x, y, gamma) if side == "left" else (beta, x, y)
            out[key] += c * d
    return _clean(out)


def omega(e: QSymExpr, reverse: bool = True) -> QSymExpr:
    """The omega involution on the F basis.

    With ``reverse=True`` (default) F_alpha goes to F of the reversed
    complement, the convention under which omega is (-1)^n times the
    antipode.  ``reverse=False`` sends F_alpha to F of the plain complement.
    """
    f = e if e.basis == "F" else expand_in_F(e)
    index_map = transpose if reverse else complement
    return QSymExpr("F", {index_map(a): c for a, c in f.terms.items()})


def antipode(e: QSymExpr) -> QSymExpr:
    """S(F_alpha) = (-1)^|alpha| F of the reversed complement of alpha."""
    f = e if e.basis == "F" else expand_in_F(e)
    return QSymExpr("F", {transpose(a): (-1) ** sum(a) * c for a, c in f.terms.items()})


# ------------------------------------------------------- change of basis

@dataclass(frozen=True)
class TransitionMatrix:
    rows: tuple[Composition, ...]     # R_alpha, in the declared total order
    columns: tuple[Composition, ...]  # F_beta, ordered by their complements
    entries: tuple[tuple[int, ...], ...]

    def is_upper_unitriangular(self) -> bool:
        n = len(self.rows)
        for r in range(n):
            for c in range(n):
                v = self.entries[r][c]
                if r == c and v != 1:
                    return False
                if c < r and v != 0:
                    return False
        return True

    def determinant(self) -> int:
        from sympy import Matrix
        return int(Matrix(self.entries).det())


@lru_cache(maxsize=None)
def transition_matrix_R_to_F(n: int) -> TransitionMatrix:
    rows = tuple(ordered_compositions(n))
    columns = tuple(sorted(compositions_of(n), key=lambda b: order_key(complement(b))))
    col_pos = {b: j for j, b in enumerate(columns)}
    entries = [[0] * len(columns) for _ in rows]
    for r, alpha in enumerate(rows):
        for beta, c in _R_in_F(alpha):
            entries[r][col_pos[beta]] = c
    return TransitionMatrix(rows, columns, tuple(map(tuple, entries)))


def F_to_R(e: QSymExpr) -> QSymExpr:
    """Express an F-combination in the R basis by back substitution along
    the unitriangular transition matrix."""
    if e.basis != "F":
        raise ValueError("expected an F-basis expression")
    remaining = defaultdict(int, e.terms)
    out = defaultdict(int)
    while True:
        live = {b: c for b, c in remaining.items() if c}
        if not live:
            break
        beta = min(live, key=lambda b: (sum(b), order_key(complement(b))))
        alpha = complement(beta)
        c = live[beta]
        out[alpha] += c
        for gamma, d in _R_in_F(alpha):
            remaining[gamma] -= c * d
        if remaining[beta]:
            raise DecompositionError(f"R_{alpha} does not have F_{beta} on its diagonal")
    return QSymExpr("R", out)


# ---------------------------------------------------------- skew functions

def skew_R(alpha: Composition, beta: Composition, route: str = "combinatorial") -> QSymExpr:
    alpha, beta = tuple(alpha), tuple(beta)
    if not contained(beta, alpha):
        return QSymExpr("F")
    if route == "combinatorial":
        return QSymExpr("F", dict(_skew_R_in_F(alpha, beta)))
    if route == "hopf":
        return _skew_R_hopf(alpha)[beta] if beta in _skew_R_hopf(alpha) else QSymExpr("F")
    raise ValueError(f"unknown route {route!r}")


@lru_cache(maxsize=None)
def _skew_R_hopf(alpha: Composition) -> dict:
    """Coefficients X_beta in ΔR_alpha = sum_beta R_beta ⊗ X_beta."""
    delta = coproduct(R(*alpha))
    by_right: dict[Composition, dict] = defaultdict(lambda: defaultdict(int))
    for (left, right), c in delta.terms.items():
        by_right[right][left] += c
    out: dict[Composition, dict] = defaultdict(lambda: defaultdict(int))
    for right, left_terms in by_right.items():
        for beta, c in F_to_R(QSymExpr("F", left_terms)).terms.items():
            out[beta][right] += c
    return {beta: QSymExpr("F", terms) for beta, terms in out.items() if _clean(terms)}


# ---------------------------------------------------------------- products

def product_and_decompose(a: QSymExpr, b: QSymExpr, k: int | None = None) -> QSymExpr:
    """Multiply two homogeneous functions and expand the product over R.

    Only the packed monomials x_1^b_1 ... x_l^b_l of the product are formed;
    they are exactly the M-coefficients.  With ``k`` at least the total
    degree this is faithful.
    """
    da, db = a.degrees() or {0}, b.degrees() or {0}
    if len(da) != 1 or len(db) != 1:
        raise ValueError("product_and_decompose needs homogeneous inputs")
    n = da.pop() + db.pop()
    k = n if k is None else k
    pa, pb = to_monomials(a, k), to_monomials(b, k)
    m_terms = {}
    for beta in compositions_of(n):
        if len(beta) > k:
            continue
        target = beta + (0,) * (k - len(beta))
        total = 0
        for e, c in pa.terms.items():
            rest = tuple(t - x for t, x in zip(target, e))
            if min(rest, default=0) >= 0:
                total += c * pb.terms.get(rest, 0)
        m_terms[beta] = total
    f = F_from_M(QSymExpr("M", m_terms))
    return F_to_R(f)


def multiply_monomials(a: QSymExpr, b: QSymExpr, k: int) -> MonomialPoly:
    return to_monomials(a, k) * to_monomials(b, k)


# ----------------------------------------------------------- Schur identities

def schur_sums(lam: Partition, mu: Partition = (), k: int | None = None):
    """Both sides of s_lam = sum R_alpha over shape(alpha) = lam', or, with
    mu, of s_{lam'/mu'} = sum of skew R over rearrangements of lam / mu."""
    lam, mu = tuple(lam), tuple(mu)
    from .compositions import conjugate
    n = sum(lam) - sum(mu)
    k = n if k is None else k
    if not mu:
        lhs = _schur_monomials(lam, k)
        rhs = to_monomials(QSymExpr("R", {a: 1 for a in rearrangements(conjugate(lam))}), k)
        return lhs, rhs
    lhs = _schur_monomials(conjugate(lam), k, conjugate(mu))
    rhs = MonomialPoly(k)
    for alpha, beta in skew_index_set(lam, mu):
        rhs = rhs + to_monomials(QSymExpr("SkewR", {SkewShape(alpha, beta): 1}), k)
    return lhs, rhs


def skew_index_set(lam: Partition, mu: Partition) -> list[tuple[Composition, Composition]]:
    """Pairs (alpha, beta) with alpha rearranging lam and beta = rev(mu)
    contained in alpha.

    rev(mu) is the only inner shape the placement bijection h produces:
    inner zeros settle in the lowest rows, longest on top.
    """
    inner = tuple(mu)[::-1]
    return [(a, inner) for a in rearrangements(lam) if contained(inner, a)]


def basis_sum(basis: str, lam: Partition) -> QSymExpr:
    return QSymExpr(basis, {a: 1 for a in rearrangements(lam)})
