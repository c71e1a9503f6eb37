"""Frozen reference designs used across the test suite.

Raw tuples first, library objects built from them below. The raw data
is the ground truth; nothing here is computed by the code under test.
"""

from gencov import Design, PartStructure, make_block

# Classical (8,5,2) cover with 4 blocks.
COVER_852_RAW = (
    ((1, 2, 3, 4, 5),),
    ((1, 5, 6, 7, 8),),
    ((2, 3, 6, 7, 8),),
    ((4, 5, 6, 7, 8),),
)

# Strength-2 covering array on four binary columns, 5 rows.
CA_5_4_2_ROWS = (
    (0, 0, 0, 0),
    (1, 1, 1, 0),
    (1, 1, 0, 1),
    (1, 0, 1, 1),
    (0, 1, 1, 1),
)

# Mixed 6-block design on parts (4,2,2) with profile (2,1,1).
MIXED_422_RAW = (
    ((1, 2), (1,), (1,)),
    ((1, 3), (1,), (2,)),
    ((1, 4), (2,), (1,)),
    ((2, 3), (2,), (2,)),
    ((2, 4), (1,), (2,)),
    ((3, 4), (2,), (1,)),
)

# Fano plane, the unique (7,3,2) cover with 7 blocks.
FANO_RAW = (
    ((1, 2, 4),),
    ((2, 3, 5),),
    ((3, 4, 6),),
    ((4, 5, 7),),
    ((1, 5, 6),),
    ((2, 6, 7),),
    ((1, 3, 7),),
)

# 7-block design on parts (5,6,7), profile (3,4,3), lifted from the Fano base.
MINIMAX_567_RAW = (
    ((1, 2, 4), (1, 2, 3, 4), (1, 2, 4)),
    ((2, 3, 5), (1, 2, 3, 5), (2, 3, 5)),
    ((1, 3, 4), (1, 3, 4, 6), (3, 4, 6)),
    ((1, 4, 5), (1, 2, 4, 5), (4, 5, 7)),
    ((1, 2, 5), (1, 2, 5, 6), (1, 5, 6)),
    ((1, 2, 3), (1, 2, 3, 6), (2, 6, 7)),
    ((1, 2, 3), (1, 2, 3, 4), (1, 3, 7)),
)

# 10-block factor on parts (5,7) with profile (2,3).
PROD_B_RAW = (
    ((1, 2), (1, 2, 3)),
    ((3, 4), (1, 4, 7)),
    ((1, 5), (1, 5, 6)),
    ((4, 5), (2, 4, 6)),
    ((2, 3), (2, 5, 7)),
    ((2, 4), (3, 4, 5)),
    ((3, 5), (3, 6, 7)),
    ((1, 4), (1, 2, 4)),
    ((1, 3), (1, 2, 7)),
    ((2, 5), (1, 2, 6)),
)

# 6-block factor on parts (3,4) with profile (2,2).
PROD_C_RAW = (
    ((1, 2), (1, 2)),
    ((1, 3), (1, 3)),
    ((1, 2), (1, 4)),
    ((2, 3), (2, 3)),
    ((2, 3), (2, 4)),
    ((1, 3), (3, 4)),
)

# First stage of the improved concatenation product: pair factor blocks
# off and reuse the first short block once the short factor runs out.
PROD_STAGE1_RAW = tuple(
    b + c for b, c in zip(PROD_B_RAW, PROD_C_RAW + (PROD_C_RAW[0],) * 4)
)

# Second stage grouped by the strength-1 block of the second factor.
# The operation emits the same six blocks but iterates the first factor
# in the outer loop; compare as a multiset plus the pinned first element.
PROD_STAGE2_GROUPED_RAW = (
    ((1, 2), (1, 2, 3), (1, 2), (1, 2)),
    ((3, 4), (4, 5, 6), (1, 2), (1, 2)),
    ((1, 5), (1, 2, 7), (1, 2), (1, 2)),
    ((1, 2), (1, 2, 3), (1, 3), (3, 4)),
    ((3, 4), (4, 5, 6), (1, 3), (3, 4)),
    ((1, 5), (1, 2, 7), (1, 3), (3, 4)),
)

# The operation's exact output order: stage 1 then stage 2 row-major.
PROD_CONCAT_IMPROVED_RAW = PROD_STAGE1_RAW + (
    PROD_STAGE2_GROUPED_RAW[0],
    PROD_STAGE2_GROUPED_RAW[3],
    PROD_STAGE2_GROUPED_RAW[1],
    PROD_STAGE2_GROUPED_RAW[4],
    PROD_STAGE2_GROUPED_RAW[2],
    PROD_STAGE2_GROUPED_RAW[5],
)

# 3-block factor on parts (3,4) with profile (2,3).
HADAMARD_BASE_RAW = (
    ((1, 2), (1, 2, 3)),
    ((1, 3), (1, 2, 4)),
    ((2, 3), (1, 3, 4)),
)

# Expected 9-block pointwise product of the factor above with itself,
# on parts (9,16) with profile (4,9).
HADAMARD_9_16_RAW = (
    ((1, 2, 4, 5), (1, 2, 3, 5, 6, 7, 9, 10, 11)),
    ((1, 2, 7, 8), (1, 2, 3, 5, 6, 7, 13, 14, 15)),
    ((4, 5, 7, 8), (1, 2, 3, 9, 10, 11, 13, 14, 15)),
    ((1, 3, 4, 6), (1, 2, 4, 5, 6, 8, 9, 10, 12)),
    ((1, 3, 7, 9), (1, 2, 4, 5, 6, 8, 13, 14, 16)),
    ((4, 6, 7, 9), (1, 2, 4, 9, 10, 12, 13, 14, 16)),
    ((2, 3, 5, 6), (1, 3, 4, 5, 7, 8, 9, 11, 12)),
    ((2, 3, 8, 9), (1, 3, 4, 5, 7, 8, 13, 15, 16)),
    ((5, 6, 8, 9), (1, 3, 4, 9, 11, 12, 13, 15, 16)),
)


def build(v, k, t, raw, lam=1):
    s = PartStructure(tuple(v), tuple(k))
    return Design(s, t, tuple(make_block(s, b) for b in raw), lam)


def cover_852():
    return build((8,), (5,), 2, COVER_852_RAW)


def mixed_422():
    return build((4, 2, 2), (2, 1, 1), 2, MIXED_422_RAW)


def fano():
    return build((7,), (3,), 2, FANO_RAW)


def minimax_567():
    return build((5, 6, 7), (3, 4, 3), 2, MINIMAX_567_RAW)


def prod_b():
    return build((5, 7), (2, 3), 2, PROD_B_RAW)


def prod_c():
    return build((3, 4), (2, 2), 2, PROD_C_RAW)


def hadamard_base():
    return build((3, 4), (2, 3), 2, HADAMARD_BASE_RAW)


def hadamard_9_16():
    return build((9, 16), (4, 9), 2, HADAMARD_9_16_RAW)


def strength2_fixtures():
    """Every frozen strength-2 fixture as (name, design) pairs."""
    return [
        ("cover_852", cover_852()),
        ("mixed_422", mixed_422()),
        ("fano", fano()),
        ("minimax_567", minimax_567()),
        ("prod_b", prod_b()),
        ("prod_c", prod_c()),
        ("hadamard_base", hadamard_base()),
        ("hadamard_9_16", hadamard_9_16()),
    ]
