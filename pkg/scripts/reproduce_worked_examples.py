"""Recompute each worked example shipped in ``yrqsym.worked_examples`` and
report whether the library reproduces the stored outcome.

    python scripts/reproduce_worked_examples.py [--show]
"""
import argparse

from yrqsym import worked_examples as ex
from yrqsym.bijections import f_map, h_map, phi, phi_tilde, rho
from yrqsym.insertion_lr import double_word, double_word_insertion, insert
from yrqsym.qsym import R, expand_in_F, to_monomials
from yrqsym.tableaux import Filling, Kind, reading_word, restrict, standardize

pic = Filling.from_picture


def insertion_case():
    res = insert(pic(Kind.SSYRT, ex.INSERTION_INPUT), ex.INSERTION_VALUE)
    return res.tableau, pic(Kind.SSYRT, ex.INSERTION_PRINTED)


def restrict_case():
    lower, upper = restrict(pic(Kind.SSYRT, ex.RESTRICT_INPUT), 6)
    want = (pic(Kind.SSYRT, ex.RESTRICT_LOWER), pic(Kind.SSYRT, ex.RESTRICT_UPPER))
    return (lower, upper), want


def double_word_case():
    u, s = pic(Kind.SSYRT, ex.LR_U), pic(Kind.ROW_STRICT_SSYT, ex.LR_S)
    v, t = double_word_insertion(u, s, ex.LR_LAMBDA)
    got = (double_word(s), v, t.filling)
    return got, (ex.LR_DOUBLE_WORD, pic(Kind.SSYRT, ex.LR_V), pic(Kind.SSYRT, ex.LR_T))


CASES = {
    "R(1,2,1,2) monomials": lambda: (to_monomials(R(1, 2, 1, 2), 4).terms, ex.R_1212_MONOMIALS),
    "R(2,3) over F": lambda: (expand_in_F(R(2, 3)).terms, ex.R_23_IN_F),
    "standardization": lambda: (standardize(pic(Kind.ROW_STRICT_SSYT, ex.STD_INPUT)),
                                pic(Kind.ROW_STRICT_SSYT, ex.STD_OUTPUT)),
    "rho": lambda: (rho(pic(Kind.ROW_STRICT_SSYT, ex.RHO_INPUT)), pic(Kind.SSYRT, ex.RHO_OUTPUT)),
    "reading word": lambda: (reading_word(pic(Kind.SSYRT, ex.RHO_OUTPUT)), ex.READ_WORD),
    "SSYRT standardization": lambda: (standardize(pic(Kind.SSYRT, ex.RHO_OUTPUT)),
                                      pic(Kind.SSYRT, ex.ST_OUTPUT)),
    "insertion": insertion_case,
    "f map": lambda: (f_map(pic(Kind.SSRRT, ex.F_MAP_INPUT), 4), pic(Kind.SSYRT, ex.F_MAP_OUTPUT)),
    "restriction": restrict_case,
    "h map": lambda: (h_map(pic(Kind.SSYT, ex.H_INPUT)), pic(Kind.SSYRT, ex.H_OUTPUT)),
    "phi": lambda: (phi(pic(Kind.SSRCT, ex.PHI_INPUT)), pic(Kind.SSRRT, ex.PHI_OUTPUT)),
    "phi tilde": lambda: (phi_tilde(pic(Kind.SSYCT, ex.PHI_TILDE_INPUT)),
                          pic(Kind.SSYRT, ex.PHI_TILDE_OUTPUT)),
    "double word insertion": double_word_case,
}


def show(value) -> str:
    if isinstance(value, Filling):
        return value.render()
    if isinstance(value, tuple) and value and isinstance(value[0], Filling):
        return "\n--\n".join(v.render() for v in value)
    return repr(value)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--show", action="store_true", help="draw computed and stored values on mismatch")
    args = parser.parse_args()
    mismatches = 0
    for name, case in CASES.items():
        got, want = case()
        ok = got == want
        mismatches += not ok
        print(f"{'match' if ok else 'MISMATCH':9} {name}")
        if not ok and args.show:
            print("computed:\n" + show(got) + "\nstored:\n" + show(want))
    print(f"{len(CASES) - mismatches}/{len(CASES)} reproduced")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
