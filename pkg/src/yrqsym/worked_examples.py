"""Small worked examples used by the verification suites and the test-suite.

Tableaux are given as drawings, top row first, ``"*"`` for inner cells.
Monomials are exponent vectors.
"""

# the seven SSYRT of shape (1,2,1,2) with entries <= 4, and their weights
SSYRT_1212 = (
    [[2, 3], [2], [1, 2], [1]],
    [[2, 4], [2], [1, 2], [1]],
    [[3, 4], [2], [1, 2], [1]],
    [[3, 4], [3], [1, 2], [1]],
    [[3, 4], [3], [1, 3], [1]],
    [[3, 4], [3], [2, 3], [1]],
    [[3, 4], [3], [2, 3], [2]],
)
R_1212_MONOMIALS = {
    (2, 3, 1, 0): 1, (2, 3, 0, 1): 1, (2, 2, 1, 1): 1, (2, 1, 2, 1): 1,
    (2, 0, 3, 1): 1, (1, 1, 3, 1): 1, (0, 2, 3, 1): 1,
}

# R_(2,3) over F, with the three SYRT that produce it
R_23_IN_F = {(2, 2, 1): 1, (2, 1, 2): 1, (1, 2, 1, 1): 1}
SYRT_23 = (
    ([[2, 3, 5], [1, 4]], {2, 4}),
    ([[2, 3, 4], [1, 5]], {2, 3}),
    ([[3, 4, 5], [1, 2]], {1, 3, 4}),
)

# standardization of a row-strict Young tableau
STD_INPUT = [[2], [2, 4, 5], [1, 2, 4, 5], [1, 2, 3, 5]]
STD_OUTPUT = [[6], [5, 9, 12], [2, 4, 8, 11], [1, 3, 7, 10]]

# rho on a row-strict Young tableau of shape (5,4,4,1)
RHO_INPUT = [[6], [2, 4, 5, 7], [1, 3, 5, 6], [1, 2, 3, 4, 6]]
RHO_OUTPUT = [[6], [2, 3, 5, 6], [1, 2, 3, 4, 6], [1, 4, 5, 7]]

# reading word and standardization of an SSYRT (the rho output above)
READ_WORD = (6, 6, 4, 7, 5, 3, 5, 3, 2, 4, 1, 1, 2, 6)
ST_OUTPUT = [[13], [4, 6, 9, 12], [2, 3, 5, 7, 11], [1, 8, 10, 14]]

# inserting 3 into an SSYRT and the published outcome, which the rules here do not reproduce
INSERTION_INPUT = [[3, 4, 5], [2], [1, 2, 3, 5], [1, 2, 4]]
INSERTION_VALUE = 3
INSERTION_PRINTED = [[4], [3, 4, 5], [2], [1, 2, 3, 5], [1, 2, 3]]
INSERTION_PRINTED_PATH = ((2, 3), (1, 3), (4, 2), (5, 1))

# f on an SSRRT of (1,3,2,3,2) with m = 4, weights before and after
F_MAP_INPUT = [[2], [3, 2, 1], [3, 2], [4, 3, 2], [4, 3]]
F_MAP_OUTPUT = [[3], [2, 3, 4], [2, 3], [1, 2, 3], [1, 2]]
F_MAP_WEIGHTS = ((1, 4, 4, 2), (2, 4, 4, 1))

# split of a standard SYRT at 6 and the descent compositions of the pieces
RESTRICT_INPUT = [[7, 8, 10], [6], [2, 3, 4, 9], [1, 5]]
RESTRICT_LOWER = [[6], [2, 3, 4], [1, 5]]
RESTRICT_UPPER = [[1, 2, 4], ["*"], ["*", "*", "*", 3], ["*", "*"]]

# h: SSYT of shape lam'/mu' -> skew SSYRT; the SSYT is drawn French here
H_INPUT = [[1, 4], ["*", 3, 4], ["*", "*", 2], ["*", "*", 1, 1]]
H_OUTPUT = [[1, 2, 3, 4], [1], ["*", "*", "*", 1], ["*", "*", 4]]

# phi on an SSRCT and phi~ on its f image (m = 4)
PHI_INPUT = [[4, 2, 1], ["*", "*", 4, 4], ["*", "*", 3], ["*", 1]]
PHI_OUTPUT = [[4, 3, 2, 1], [4], ["*", "*", "*", 4], ["*", "*", 1]]
PHI_TILDE_INPUT = [[1, 3, 4], ["*", "*", 1, 1], ["*", "*", 2], ["*", 4]]
PHI_TILDE_OUTPUT = [[1, 2, 3, 4], [1], ["*", "*", "*", 1], ["*", "*", 4]]

# double-word insertion producing an LR skew SSYRT
LR_U = [[2, 3, 4], [2], [1, 2], [1]]
LR_S = [[2, 3], [2, 3, 4], [1, 2, 3, 5]]
LR_LAMBDA = (3, 3, 2, 1)
LR_DOUBLE_WORD = ((1, 1, 1, 2, 2, 2, 3, 3, 4), (2, 2, 1, 3, 3, 2, 4, 3, 5))
LR_V = [[2, 3, 4], [2], [2], [1, 2, 3, 4, 5], [1, 2, 3], [1, 2, 3]]
LR_T = [["*", "*", "*"], ["*"], [1], ["*", "*", 2, 3, 4], ["*", 1, 2], [1, 2, 3]]
