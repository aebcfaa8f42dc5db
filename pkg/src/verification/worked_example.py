"""The worked example in Sym(11) used by the self-test and the test suite."""

WORKED_PERMUTATION_TEXT = "(1 8 2)(3)(4 5 10 7)(6)(9 11)"
WORKED_DEGREE = 11
WORKED_FACTORS = (9, 11, 9, 2, 10, 5, 3, 3, 4, 7, 6, 6, 10, 8)
WORKED_WORD = (5, 5, 5, 1, 3, 3, 2, 2, 3, 3, 4, 4, 3, 1)
WORKED_ANCHORS = (3, 10, 6, 9)
WORKED_TREE_PAREN = "1(5(*) * 3(* 2 * * 4) *)"
WORKED_LENGTHS = (3, 1, 4, 1, 2)
WORKED_TRANSITIVE_COUNT = 52416
WORKED_MINIMAL_COUNT = 240
WORKED_WORD_COUNT = 6552
