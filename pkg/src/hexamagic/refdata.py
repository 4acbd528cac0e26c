"""Expected values embedded for verification.

Every table the CLI emits is checked cell-by-cell against these
reference rows; a failure report cites the table, row and column.
Entries marked copy-dependent (type splits and entanglement strings for
a particular hyperplane copy) are comparison targets, not hard checks:
they are reproduced by *some* copy of the orbit but not by every copy.
"""
from typing import NamedTuple


class Table1Row(NamedTuple):
    cls: str
    profile: tuple  # (n0, n1, n2, n3)
    pts: int
    lns: int
    dpts: int
    dpts_decomposition: str  # as printed in the reference table
    copies: int
    stabilizer_order: int
    complement: str | None


# label -> row, in the reference table's row order
TABLE1 = {
    "V2": Table1Row("I", (21, 0, 0, 0), 21, 0, 0, "0", 36, 336, "heawood+coxeter"),
    "V7": Table1Row("II", (16, 6, 0, 1), 23, 3, 1, "1", 126, 96, None),
    "V11": Table1Row("III", (10, 12, 3, 0), 25, 6, 0, "0", 504, 24, None),
    "V1": Table1Row("IV", (0, 27, 0, 0), 27, 9, 0, "0", 28, 432, "pappus+pappus"),
    "V8": Table1Row("IV", (8, 15, 0, 4), 27, 9, 4, "3+1", 252, 48, None),
    "V13": Table1Row("IV", (8, 11, 8, 0), 27, 9, 0, "0", 756, 16, None),
    "V17": Table1Row("IV", (6, 15, 6, 0), 27, 9, 0, "0", 1008, 12, None),
    "V12": Table1Row("V", (7, 12, 6, 4), 29, 12, 4, "4", 504, 24, None),
    "V18": Table1Row("V", (5, 12, 12, 0), 29, 12, 0, "0", 1008, 12, None),
    "V19": Table1Row("V", (6, 12, 9, 2), 29, 12, 2, "2nc", 1008, 12, None),
    "V23": Table1Row("V", (4, 16, 7, 2), 29, 12, 2, "2c", 1512, 8, None),
    "V6": Table1Row("VI", (0, 24, 0, 7), 31, 15, 7, "6+1", 63, 192, "dyck"),
    "V24": Table1Row("VI", (4, 12, 12, 3), 31, 15, 3, "2+1", 1512, 8, None),
    "V25": Table1Row("VI", (4, 12, 12, 3), 31, 15, 3, "3", 2016, 6, None),
    "V14": Table1Row("VII", (4, 8, 17, 4), 33, 18, 4, "2+2", 756, 16, None),
    "V20": Table1Row("VII", (2, 12, 15, 4), 33, 18, 4, "3+1", 1008, 12, None),
    "V3": Table1Row("VIII", (0, 21, 0, 14), 35, 21, 14, "14", 36, 336, "coxeter"),
    "V16": Table1Row("VIII", (0, 13, 16, 6), 35, 21, 6, "4+2", 756, 16, None),
    "V21": Table1Row("VIII", (2, 9, 18, 6), 35, 21, 6, "6", 1008, 12, None),
    "V15": Table1Row("IX", (1, 8, 20, 8), 37, 24, 8, "8", 756, 16, None),
    "V22": Table1Row("IX", (0, 12, 15, 10), 37, 24, 10, "6+3+1", 1008, 12, None),
    "V10": Table1Row("X", (0, 10, 16, 13), 39, 27, 13, "8+4+1", 378, 32, None),
    "V9": Table1Row("XI", (0, 3, 24, 16), 43, 33, 16, "12+3+1", 252, 48, "nonrealizable-10_3-levi"),
    "V5": Table1Row("XII", (0, 0, 27, 18), 45, 36, 18, "18", 56, 216, "pappus"),
    "V4": Table1Row("XIII", (0, 0, 21, 28), 49, 42, 28, "28", 36, 336, "heawood"),
}

TABLE1_ORDER = list(TABLE1)

# (pts, (n0,n1,n2,n3), copy count) -> label; unique for all 25 types
ORBIT_LABELS = {
    (row.pts, row.profile, row.copies): label for label, row in TABLE1.items()
}

HYPERPLANE_TOTAL = 16_383
INCIDENCE_RANK = 49

SP6_2_ORDER = 1_451_520
HEXAGON_AUT_ORDER = 12_096
SYM35_STRUCTURE_AUT_ORDER = 40_320
PENTAGRAM_AUT_ORDER = 120
WA_AUT_ORDER = 36

PENTAGRAM_TOTAL = 12_096
PENTAGRAM_TYPE_SPLIT = (108, 4104, 7884)  # types 1, 2, 3


class Table2Row(NamedTuple):
    pts: int
    cps: int
    pents: int
    split: tuple  # copy-dependent except for V3 and the trivial row
    split_copy_dependent: bool
    product: int


TABLE2 = {
    "V12": Table2Row(29, 504, 24, (1, 5, 18), True, 12096),
    "V24": Table2Row(31, 1512, 8, (2, 6, 0), True, 12096),
    "V20": Table2Row(33, 1008, 20, (0, 0, 20), True, 20160),
    "V14": Table2Row(33, 756, 16, (0, 2, 14), True, 12096),
    "V3": Table2Row(35, 36, 336, (2, 84, 250), False, 12096),
    "V16": Table2Row(35, 756, 32, (0, 6, 26), True, 2 * 12096),
    "V21": Table2Row(35, 1008, 36, (0, 12, 24), True, 3 * 12096),
    "V15": Table2Row(37, 756, 96, (2, 22, 72), True, 6 * 12096),
    "V22": Table2Row(37, 1008, 48, (0, 0, 48), True, 4 * 12096),
    "V10": Table2Row(39, 378, 160, (0, 36, 124), True, 3 * 20160),
    "V9": Table2Row(43, 252, 336, (8, 152, 176), True, 7 * 12096),
    "V5": Table2Row(45, 56, 432, (16, 136, 280), True, 2 * 12096),
    "V4": Table2Row(49, 36, 1456, (32, 546, 878), True, 156 * 336),
    "trivial": Table2Row(63, 1, 12096, (108, 4104, 7884), False, 12096),
}

# second-copy split reported for V22 in the reference table
TABLE2_V22_SECOND_COPY_SPLIT = (0, 26, 22)

SMALLEST_PENTAGRAM_ORBIT = "V12"

TRIANGLE_TOTAL = 3780
WA_CONJECTURED_TOTAL = 40_320


class Table3Row(NamedTuple):
    pts: int
    cps: int
    was: int
    split: tuple  # types 1..4 (minus counts 7,5,3,1); copy-dependent
    product_text: str


TABLE3 = {
    "V22": Table3Row(37, 1008, 7, (0, 0, 1, 6), "21 x 336"),
    "V10": Table3Row(39, 378, 16, (0, 0, 4, 12), "1/2 x 12096"),
    "V9": Table3Row(43, 252, 40, (0, 22, 16, 2), "1/2 x 20160"),
    "V5": Table3Row(45, 56, 126, (14, 64, 42, 6), "21 x 336"),
    "V4": Table3Row(49, 36, 336, (60, 204, 60, 12), "12096"),
}
TABLE3_V22_SECOND_COPY_SPLIT = (0, 5, 1, 1)

# entangled-edge histogram of the full pentagram census: 216*(3,17,18,14,3,1)
EQ2_HISTOGRAM = (648, 3672, 3888, 3024, 648, 216)
UNENTANGLED_PENTAGRAM_TOTAL = 648

# trivial rows of the pentagram entanglement table (copy-independent)
TABLE4_TRIVIAL = {
    1: (0, 0, 0, 54, 0, 54),
    2: (0, 810, 972, 1836, 324, 162),
    3: (648, 2862, 2916, 1134, 324, 0),
}

# per-copy reference strings (the copy the reference table happened to
# use; comparison targets only)
TABLE4_COPIES = {
    ("V12", 1): (0, 0, 0, 0, 0, 1),
    ("V12", 2): (0, 0, 0, 5, 0, 0),
    ("V12", 3): (0, 4, 8, 6, 0, 0),
    ("V24", 1): (0, 0, 0, 2, 0, 0),
    ("V24", 2): (0, 6, 0, 0, 0, 0),
    ("V20", 3): (0, 20, 0, 0, 0, 0),
    ("V14", 2): (0, 2, 0, 0, 0, 0),
    ("V14", 3): (0, 6, 8, 0, 0, 0),
    ("V3", 1): (0, 0, 0, 0, 0, 2),
    ("V3", 2): (0, 24, 24, 36, 0, 0),
    ("V3", 3): (24, 106, 96, 24, 0, 0),
    ("V16", 2): (0, 4, 2, 0, 0, 0),
    ("V16", 3): (4, 16, 6, 0, 0, 0),
    ("V21", 2): (0, 6, 4, 2, 0, 0),
    ("V21", 3): (0, 22, 0, 2, 0, 0),
    ("V15", 1): (0, 0, 0, 0, 0, 2),
    ("V15", 2): (0, 2, 6, 14, 0, 0),
    ("V15", 3): (4, 14, 36, 16, 2, 0),
    ("V22", 3): (0, 26, 22, 0, 0, 0),
    ("V10", 2): (0, 8, 18, 8, 2, 0),
    ("V10", 3): (28, 48, 46, 0, 2, 0),
    ("V9", 1): (0, 0, 0, 4, 0, 4),
    ("V9", 2): (0, 28, 30, 74, 10, 10),
    ("V9", 3): (4, 34, 90, 38, 10, 0),
    ("V5", 1): (0, 0, 0, 8, 0, 8),
    ("V5", 2): (0, 16, 16, 76, 16, 12),
    ("V5", 3): (8, 36, 124, 92, 20, 0),
    ("V4", 1): (0, 0, 0, 12, 0, 20),
    ("V4", 2): (0, 36, 96, 324, 60, 30),
    ("V4", 3): (0, 146, 372, 264, 96, 0),
}

# WA entanglement strings [g0..g8] for reference copies (criterion-
# and copy-dependent; comparison targets only)
TABLE5_COPIES = {
    ("V22", 3): (1, 0, 0, 0, 0, 0, 0, 0, 0),
    ("V22", 4): (3, 0, 0, 3, 0, 0, 0, 0, 0),
    ("V10", 3): (0, 2, 1, 1, 0, 0, 0, 0, 0),
    ("V10", 4): (1, 5, 3, 2, 1, 0, 0, 0, 0),
    ("V9", 2): (0, 0, 4, 6, 2, 4, 5, 1, 0),
    ("V9", 3): (0, 2, 3, 7, 4, 0, 0, 0, 0),
    ("V9", 4): (0, 0, 0, 2, 0, 0, 0, 0, 0),
    ("V5", 1): (0, 2, 2, 4, 2, 4, 0, 0, 0),
    ("V5", 2): (0, 0, 6, 13, 13, 6, 19, 4, 3),
    ("V5", 3): (0, 2, 10, 7, 18, 2, 2, 0, 1),
    ("V5", 4): (0, 3, 0, 0, 1, 0, 2, 0, 0),
    ("V4", 1): (0, 0, 0, 0, 18, 18, 24, 0, 0),
    ("V4", 2): (0, 0, 12, 12, 48, 72, 30, 30, 0),
    ("V4", 3): (0, 0, 12, 18, 18, 12, 0, 0, 0),
    ("V4", 4): (0, 0, 0, 0, 6, 6, 0, 0, 0),
}

# section-5 derived configurations
CONFIG_108 = {"points": 36, "edges": 81, "degrees": (3, 11), "disjointness_aut": 324}
CONFIG_216 = {"points": 54, "edges": 378, "degrees": (24, 32), "aut": 1296}
CONFIG_27 = {"points": 27, "edges": 54, "point_degree": 8}

SUBSTRATE = {"points": 63, "lines": 315, "fano": 135, "edges": 945}
EDGE_SIGNS = {"plus": 621, "minus": 324}
SYMMETRIC_POINTS = 35
SYMMETRIC_LINES = 105
