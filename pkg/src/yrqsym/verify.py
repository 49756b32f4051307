"""Exhaustive verification suites.

Each suite compares two independent computations over a bounded domain and
stops at the first disagreement, which is returned as a certificate.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable

from . import worked_examples as ex
from .bijections import f_map, h_inverse, h_map, phi, phi_tilde, rho
from .compositions import (comp_of_subset, compositions_of, conjugate, contained,
                           near_concat, partitions_of, rearrangements)
from .insertion_lr import (double_word, double_word_insertion, insert, is_lr_skew_ssyrt,
                           lr_coefficients, lr_witnesses)
from .qsym import (QSymExpr, expand_in_F, omega, product_and_decompose, reverse_variables,
                   schur_sums, skew_R, skew_index_set, tableau_weights, to_monomials,
                   transition_matrix_R_to_F)
from .tableaux import (Filling, Kind, SkewShape, descent_data, enumerate_fillings,
                       enumerate_standard, glue, is_valid, reading_word, restrict, standardize)

THREADS_ENV = "YRQSYM_THREADS"


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 6            # identity suites
    triangular_n: int = 7
    insertion_n: int = 5
    lr_alpha: int = 3
    lr_lambda: int = 3
    lr_total: int = 6
    skew_size: int = 5
    skew_vars: int = 4
    phi_n: int = 5
    threads: int = 1

    @classmethod
    def from_env(cls, **overrides) -> "VerifyConfig":
        threads = int(os.environ.get(THREADS_ENV, "1") or 1)
        return cls(threads=max(1, threads), **overrides)

    def capped(self, n: int) -> "VerifyConfig":
        """Shrink every bound so that no suite goes beyond size n."""
        return replace(self, max_n=n, triangular_n=min(self.triangular_n, n + 1),
                       insertion_n=min(self.insertion_n, n), lr_alpha=min(self.lr_alpha, n),
                       lr_lambda=min(self.lr_lambda, n), lr_total=min(self.lr_total, n),
                       skew_size=min(self.skew_size, n), phi_n=min(self.phi_n, n))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    seconds: float
    certificate: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name}: {self.checked} cases in {self.seconds:.2f}s"
        if self.certificate:
            out += f"\n  counterexample: {self.certificate}"
        return out


def _run(cases: Iterable, check: Callable[[object], str | None], threads: int = 1):
    """Apply check to every case; return (count, first certificate in case order)."""
    cases = list(cases)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, cases))
    else:
        results = []
        for c in cases:
            results.append(check(c))
            if results[-1]:
                break
    bad = next((r for r in results if r), None)
    return len(cases), bad


def _pic(kind, rows) -> Filling:
    return Filling.from_picture(kind, rows)


def _partitions_upto(n: int):
    for m in range(n + 1):
        yield from partitions_of(m)


def _compositions_upto(n: int, start: int = 0):
    for m in range(start, n + 1):
        yield from compositions_of(m)


# ---------------------------------------------------------------- suites

def suite_enumeration(cfg: VerifyConfig):
    got = enumerate_fillings(Kind.SSYRT, (1, 2, 1, 2), 4)
    want = {_pic(Kind.SSYRT, p) for p in ex.SSYRT_1212}
    if set(got) != want or len(got) != 7:
        return 1, f"enumerated {len(got)} fillings, expected the 7 listed"
    poly = to_monomials(QSymExpr("R", {(1, 2, 1, 2): 1}), 4)
    if poly.terms != ex.R_1212_MONOMIALS:
        return 2, f"R_(1,2,1,2)(x1..x4) = {poly}"
    weights = tableau_weights(Kind.SSYRT, (1, 2, 1, 2), 4)
    if weights != poly:
        return 3, f"tableau weights {weights} != {poly}"
    return 3, None


def suite_expansion(cfg: VerifyConfig):
    f = expand_in_F(QSymExpr("R", {(2, 3): 1}))
    if f.terms != ex.R_23_IN_F:
        return 1, f"R_(2,3) = {f}"
    std = set(enumerate_standard(Kind.SSYRT, (2, 3)))
    for rows, descents in ex.SYRT_23:
        t = _pic(Kind.SSYRT, rows)
        if t not in std:
            return 2, f"{rows} not enumerated"
        if set(descent_data(t).right) != descents:
            return 2, f"descents of {rows}: {sorted(descent_data(t).right)}"
    return 1 + len(ex.SYRT_23), None


def suite_standardization(cfg: VerifyConfig):
    t = _pic(Kind.ROW_STRICT_SSYT, ex.STD_INPUT)
    if standardize(t) != _pic(Kind.ROW_STRICT_SSYT, ex.STD_OUTPUT):
        return 1, f"std = {standardize(t).rows}"
    r = rho(_pic(Kind.ROW_STRICT_SSYT, ex.RHO_INPUT))
    if r != _pic(Kind.SSYRT, ex.RHO_OUTPUT):
        return 2, f"rho = {r.rows}"
    if reading_word(r) != ex.READ_WORD:
        return 3, f"read = {''.join(map(str, reading_word(r)))}"
    if standardize(r) != _pic(Kind.SSYRT, ex.ST_OUTPUT):
        return 4, f"st = {standardize(r).rows}"
    return 4, None


def suite_insertion(cfg: VerifyConfig):
    res = insert(_pic(Kind.SSYRT, ex.INSERTION_INPUT), ex.INSERTION_VALUE)
    want = _pic(Kind.SSYRT, ex.INSERTION_PRINTED)
    if res.tableau != want or res.bump_path != ex.INSERTION_PRINTED_PATH:
        return 1, (f"got rows {res.tableau.rows} path {res.bump_path}; "
                   f"expected rows {want.rows} path {ex.INSERTION_PRINTED_PATH}")
    return 1, None


def suite_schur(cfg: VerifyConfig):
    def check(lam):
        lhs, rhs = schur_sums(lam, k=sum(lam))
        return None if lhs == rhs else f"lambda={lam}: s = {lhs}, sum R = {rhs}"
    return _run([lam for lam in _partitions_upto(cfg.max_n) if lam], check, cfg.threads)


def suite_triangular(cfg: VerifyConfig):
    def check(n):
        m = transition_matrix_R_to_F(n)
        return None if m.is_upper_unitriangular() else f"n={n}: matrix not unitriangular"
    return _run(range(1, cfg.triangular_n + 1), check, cfg.threads)


def suite_skew(cfg: VerifyConfig):
    pairs = [(a, b) for a in _compositions_upto(cfg.max_n)
             for b in _compositions_upto(sum(a)) if contained(b, a)]

    def check(pair):
        a, b = pair
        comb, hopf = skew_R(a, b, "combinatorial"), skew_R(a, b, "hopf")
        return None if comb == hopf else f"R_{a}//{b}: tableaux {comb} vs coproduct {hopf}"
    return _run(pairs, check, cfg.threads)


def _descent_law(t: Filling, i: int) -> str | None:
    lower, upper = restrict(t, i)
    if glue(lower, upper) != t:
        return f"glue(restrict(T,{i})) != T for {t.rows}"
    n = t.size
    whole = comp_of_subset(descent_data(t).right, n)
    lo = comp_of_subset(descent_data(lower).right, i) if i else ()
    up = comp_of_subset(descent_data(upper).right, n - i) if i < n else ()
    if not lo or not up:
        joined = lo or up
    elif i in descent_data(t).right:
        joined = lo + up
    else:
        joined = near_concat(lo, up)
    return None if joined == whole else f"T={t.rows}, i={i}: {whole} vs {lo}, {up}"


def suite_restrict(cfg: VerifyConfig):
    cases = [(t, i) for a in _compositions_upto(cfg.max_n, 1)
             for t in enumerate_standard(Kind.SSYRT, a) for i in range(t.size + 1)]
    return _run(cases, lambda c: _descent_law(*c), cfg.threads)


def suite_omega(cfg: VerifyConfig):
    def check(alpha):
        n = sum(alpha)
        lhs = to_monomials(omega(QSymExpr("S", {alpha: 1})), n)
        rhs = reverse_variables(to_monomials(QSymExpr("R", {alpha: 1}), n))
        return None if lhs == rhs else f"alpha={alpha}: omega(S) = {lhs}, R reversed = {rhs}"
    return _run(list(_compositions_upto(cfg.max_n, 1)), check, cfg.threads)


def _lr_vs_product(case):
    alpha, lam = case
    got = lr_coefficients(alpha, lam)
    want = product_and_decompose(QSymExpr("R", {alpha: 1}), QSymExpr("s", {lam: 1})).terms
    return None if got == want else f"alpha={alpha}, lambda={lam}: LR {got} vs product {want}"


def _insertion_intertwines(case):
    t, x, m = case
    lhs = insert(f_map(t, m), m + 1 - x).tableau
    rhs = f_map(insert(t, x).tableau, m)
    return None if lhs == rhs else f"T={t.rows}, x={x}: f(T)<-x* = {lhs.rows}, f(T<-x) = {rhs.rows}"


def _reverse_lr_image(case):
    alpha, lam = case
    m = len(lam)
    n = sum(alpha) + sum(lam)
    for beta in compositions_of(n):
        if len(beta) < len(alpha):
            continue
        forward = {w.filling for w in lr_witnesses(alpha, lam, beta)}
        image = set()
        for w in lr_witnesses(alpha[::-1], lam, beta[::-1], reverse=True):
            g = f_map(w.filling, m)
            if not is_lr_skew_ssyrt(g, lam):
                return f"f of reverse-LR {w.filling.rows} is not LR"
            image.add(g)
        if image != forward:
            return f"alpha={alpha}, lambda={lam}, beta={beta}: {len(image)} images vs {len(forward)} LR"
    return None


def suite_lr(cfg: VerifyConfig):
    total, bad = 0, None
    prod_cases = [(a, lam) for a in _compositions_upto(cfg.lr_alpha)
                  for lam in _partitions_upto(cfg.lr_lambda)]
    ins_cases = [(t, x, n) for n in range(1, cfg.insertion_n + 1) for a in compositions_of(n)
                 for t in enumerate_fillings(Kind.SSRRT, a, n) for x in range(1, n + 1)]
    rev_cases = [(a, lam) for a in _compositions_upto(cfg.lr_total)
                 for lam in _partitions_upto(cfg.lr_total - sum(a))]
    for cases, check in ((prod_cases, _lr_vs_product), (ins_cases, _insertion_intertwines),
                         (rev_cases, _reverse_lr_image)):
        count, bad = _run(cases, check, cfg.threads)
        total += count
        if bad:
            break
    return total, bad


def _skew_pairs(size: int):
    for lam in _partitions_upto(size + size):
        for mu in _partitions_upto(sum(lam)):
            if contained(mu, lam) and sum(lam) - sum(mu) <= size and sum(mu) < sum(lam):
                yield lam, mu


def _h_case(case, k):
    lam, mu = case
    ssyt = enumerate_fillings(Kind.SSYT, SkewShape(conjugate(lam), conjugate(mu)), k)
    index = {(a, b + (0,) * (len(a) - len(b))) for a, b in skew_index_set(lam, mu)}
    images = set()
    for s in ssyt:
        t = h_map(s)
        if not is_valid(t) or (t.outer, t.inner) not in index:
            return f"h({s.rows}) = {t.rows} of shape {t.outer}//{t.inner} is outside the index set"
        if t.weight_vector(k) != s.weight_vector(k) or h_inverse(t) != s:
            return f"h is not weight preserving or invertible at {s.rows}"
        images.add(t)
    # an empty mu selects the straight form, stated for the conjugate
    lhs, rhs = schur_sums(lam, mu, k) if mu else schur_sums(conjugate(lam), (), k)
    if lhs != rhs:
        return f"lam={lam}, mu={mu}: {lhs} vs {rhs}"
    # rhs enumerates every SSYRT over the index set, so equal totals make h onto
    total = sum(rhs.terms.values())
    return None if total == len(images) else f"lam={lam}, mu={mu}: h hits {len(images)} of {total}"


def _conjugate_class_case(lam):
    n = sum(lam)
    lhs = to_monomials(QSymExpr("S", {a: 1 for a in rearrangements(lam)}), n)
    rhs = to_monomials(QSymExpr("R", {b: 1 for b in rearrangements(conjugate(lam))}), n)
    if lhs != rhs:
        return f"lambda={lam}: sum S = {lhs}, sum R = {rhs}"
    images = set()
    for a in rearrangements(lam):
        for u in enumerate_fillings(Kind.SSYCT, a, n):
            t = phi_tilde(u)
            if not is_valid(t) or tuple(sorted(t.outer, reverse=True)) != conjugate(lam):
                return f"phi~({u.rows}) = {t.rows} is not an SSYRT of a rearrangement of {conjugate(lam)}"
            if t.weight_vector(n) != u.weight_vector(n):
                return f"phi~ changes the weight of {u.rows}"
            images.add(t)
    count = sum(len(enumerate_fillings(Kind.SSYRT, b, n)) for b in rearrangements(conjugate(lam)))
    return None if count == len(images) else f"lambda={lam}: phi~ hits {len(images)} of {count}"


def suite_skew_schur(cfg: VerifyConfig):
    k = cfg.skew_vars
    c1, bad = _run(list(_skew_pairs(cfg.skew_size)), lambda c: _h_case(c, k), cfg.threads)
    if bad:
        return c1, bad
    lams = [lam for lam in _partitions_upto(min(cfg.max_n, 5)) if lam]
    c2, bad = _run(lams, _conjugate_class_case, cfg.threads)
    return c1 + c2, bad


def suite_commuting(cfg: VerifyConfig):
    def rho_case(t):
        a, b = rho(standardize(t)), standardize(rho(t))
        return None if a == b else f"T={t.rows}: rho(std T) = {a.rows}, st(rho T) = {b.rows}"

    def phi_case(case):
        t, m = case
        a, b = f_map(phi(t), m), phi_tilde(f_map(t, m))
        return None if a == b else f"T={t.rows}: f(phi T) = {a.rows}, phi~(f T) = {b.rows}"

    worked = _pic(Kind.SSRCT, ex.PHI_INPUT)
    if phi(worked) != _pic(Kind.SSRRT, ex.PHI_OUTPUT):
        return 1, f"phi = {phi(worked).rows}"
    u = f_map(worked, 4)
    if u != _pic(Kind.SSYCT, ex.PHI_TILDE_INPUT):
        return 2, f"f = {u.rows}"
    if phi_tilde(u) != _pic(Kind.SSYRT, ex.PHI_TILDE_OUTPUT) or f_map(phi(worked), 4) != phi_tilde(u):
        return 3, f"phi~ = {phi_tilde(u).rows}"
    rho_cases = [t for lam in _partitions_upto(cfg.max_n) if lam
                 for t in enumerate_fillings(Kind.ROW_STRICT_SSYT, lam, sum(lam))]
    c1, bad = _run(rho_cases, rho_case, cfg.threads)
    if bad:
        return 3 + c1, bad
    phi_cases = [(t, n) for n in range(1, cfg.phi_n + 1) for a in compositions_of(n)
                 for t in enumerate_fillings(Kind.SSRCT, a, n)]
    c2, bad = _run(phi_cases, phi_case, cfg.threads)
    return 3 + c1 + c2, bad


def suite_double_word(cfg: VerifyConfig):
    """Double-word insertion: the worked example and injectivity at small size."""
    u, s = _pic(Kind.SSYRT, ex.LR_U), _pic(Kind.ROW_STRICT_SSYT, ex.LR_S)
    if double_word(s) != ex.LR_DOUBLE_WORD:
        return 1, f"double word {double_word(s)}"
    v, t = double_word_insertion(u, s, ex.LR_LAMBDA)
    if v != _pic(Kind.SSYRT, ex.LR_V) or t.filling != _pic(Kind.SSYRT, ex.LR_T):
        return 2, f"V = {v.rows}, T = {t.filling.rows}"
    checked = 2
    for a in _compositions_upto(3, 1):
        for lam in _partitions_upto(2):
            if not lam:
                continue
            seen = set()
            us = enumerate_fillings(Kind.SSYRT, a, 3)
            ss = enumerate_fillings(Kind.ROW_STRICT_SSYT, conjugate(lam), 3)
            for uu in us:
                for sv in ss:
                    v, t = double_word_insertion(uu, sv, lam)
                    if not is_lr_skew_ssyrt(t.filling, lam):
                        return checked, f"recording tableau {t.filling.rows} is not LR"
                    seen.add((v, t.filling))
            checked += 1
            if len(seen) != len(us) * len(ss):
                return checked, f"alpha={a}, lambda={lam}: {len(seen)} images of {len(us) * len(ss)} pairs"
    return checked, None


# criterion number -> (suite name, function, description)
SUITES = {
    "enumeration": (1, suite_enumeration, "SSYRT of (1,2,1,2): 7 fillings and their polynomial"),
    "expansion": (2, suite_expansion, "R_(2,3) in the F basis with its three SYRT"),
    "standardization": (3, suite_standardization, "std, rho, reading word and st worked examples"),
    "insertion": (4, suite_insertion, "inserting 3 into the worked SSYRT"),
    "schur": (5, suite_schur, "s_lam = sum of R over rearrangements of lam'"),
    "triangular": (6, suite_triangular, "R-to-F transition matrices are unitriangular"),
    "skew": (7, suite_skew, "skew R by tableaux equals skew R by coproduct"),
    "restrict": (8, suite_restrict, "restrict/glue round trip and descent concatenation law"),
    "omega": (9, suite_omega, "omega(S_a)(x1..xn) = R_a(xn..x1)"),
    "lr": (10, suite_lr, "LR counts, insertion intertwining, reverse-LR image"),
    "skew_schur": (11, suite_skew_schur, "skew Schur via h and sum S = sum R over conjugate classes"),
    "commuting": (12, suite_commuting, "rho commutes with standardization, f phi = phi~ f"),
    "double_word": (0, suite_double_word, "double-word insertion worked example and injectivity"),
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or VerifyConfig.from_env()
    start = time.perf_counter()
    checked, cert = SUITES[name][1](cfg)
    return SuiteResult(name, cert is None, checked, time.perf_counter() - start, cert)


def run_all(cfg: VerifyConfig | None = None, names: Iterable[str] | None = None) -> list[SuiteResult]:
    cfg = cfg or VerifyConfig.from_env()
    return [run_suite(n, cfg) for n in (names or SUITES)]
