"""Print the R-to-F transition matrix for each n and check that it is upper
unitriangular.

    python scripts/transition_matrices.py 5
"""
import argparse

from yrqsym.qsym import transition_matrix_R_to_F


def fmt(comp) -> str:
    return "(" + ",".join(map(str, comp)) + ")"


def main():
    parser = argparse.ArgumentParser(description="R-to-F transition matrices")
    parser.add_argument("max_n", type=int, nargs="?", default=4)
    parser.add_argument("--quiet", action="store_true", help="only print the summary line per n")
    args = parser.parse_args()
    status = 0
    for n in range(1, args.max_n + 1):
        m = transition_matrix_R_to_F(n)
        triangular = m.is_upper_unitriangular()
        det = m.determinant()
        status |= not (triangular and det == 1)
        print(f"n={n}: {len(m.rows)}x{len(m.columns)}, unitriangular={triangular}, det={det}")
        if args.quiet:
            continue
        label = max(len(fmt(a)) for a in m.rows)
        print(" " * label + "  columns: " + " ".join(fmt(b) for b in m.columns))
        for alpha, row in zip(m.rows, m.entries):
            print(fmt(alpha).rjust(label) + "  " + " ".join(str(v) for v in row))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
