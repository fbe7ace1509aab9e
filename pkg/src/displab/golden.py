"""Checked-in reference tables.

Every value below is a frozen reference number the library must
reproduce by exact computation; the `paper-tables` CLI subcommand and the
acceptance suite both recompute and diff against this module.  Polynomials
are coefficient lists of rational strings, lowest degree first; equations
are (U, V, W) triples in the same encoding, read as U Y'' + V Y' + W Y = 0
and compared after canonical normalization.
"""

# Zigzag numbers and their generalizations s_{n,i} = i! a_{n,i}:
# row i holds n = 0..14.
GENERALIZED_ZIGZAG = {
    0: [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765,
        22368256, 199360981],
    1: [0, 0, 1, 3, 11, 45, 211, 1113, 6551, 42585, 303271, 2348973,
        19665491, 176992725, 1704396331],
    2: [0, 0, 0, 1, 8, 49, 308, 2031, 14352, 108833, 885676, 7715951,
        71760856, 710303697, 7460451204],
    3: [0, 0, 0, 0, 2, 25, 238, 2100, 18594, 169431, 1610158, 16042070,
        167927762, 1847548053, 21351747870],
    4: [0, 0, 0, 0, 0, 5, 96, 1276, 15104, 172319, 1967392, 22887002,
        273977600, 3392750041, 43582823456],
    5: [0, 0, 0, 0, 0, 0, 16, 427, 7600, 115791, 1654336, 23112848,
        322993424, 4573319530, 66117354592],
}

# Catalan polynomials C*_n for n = 2..6 (constant term = Catalan number).
CATALAN_POLYNOMIALS = {
    2: ["2", "3", "1/2"],
    3: ["5", "18", "12", "7/3", "1/8"],
    4: ["14", "79", "185/2", "115/3", "20/3", "59/120", "1/80"],
    5: ["42", "322", "539", "343", "1225/12", "931/60", "49/40", "17/360",
        "1/1440"],
    6: ["132", "1278", "2781", "2388", "1008", "2331/10", "623/20", "171/70",
        "123/1120", "157/60480", "1/40320"],
}

# The equations those polynomials satisfy, n = 2..6.
CATALAN_EQUATIONS = {
    2: (["0", "72", "9"], ["72", "72", "9"], ["-108", "-18"]),
    3: (["0", "200", "12"], ["200", "200", "12"], ["-720", "-48"]),
    4: (["0", "392", "15"], ["392", "392", "15"], ["-2212", "-90"]),
    5: (["0", "648", "18"], ["648", "648", "18"], ["-4968", "-144"]),
    6: (["0", "968", "21"], ["968", "968", "21"], ["-9372", "-210"]),
}

# The (2,3) two-row instance: companion polynomial at v2 and its equation
# (the integer form after dividing the raw closed-form coefficients by 48).
TWO_ROW_2_3_POLY = ["5", "13", "11/2", "1/2"]
TWO_ROW_2_3_EQUATION = (["0", "25", "2"], ["25", "25", "2"], ["-65", "-6"])

# Companion polynomials of the zigzag digraphs at the first vertex, n = 1..6.
STAIRCASE_POLYNOMIALS = {
    1: ["1"],
    2: ["1", "1"],
    3: ["2", "3", "1/2"],
    4: ["5", "11", "4", "1/3"],
    5: ["16", "45", "49/2", "25/6", "5/24"],
    6: ["61", "211", "154", "119/3", "4", "2/15"],
}

# Laguerre-pair weights g(n, i), n = 1..6 (one tuple of n rationals each).
STAIRCASE_G_TUPLES = {
    1: ["1"],
    2: ["1", "0"],
    3: ["2", "1/2", "0"],
    4: ["5", "4/3", "1/6", "0"],
    5: ["16", "19/4", "5/6", "1/12", "0"],
    6: ["61", "94/5", "37/10", "1/2", "1/24", "0"],
}

# The (Q, R) pairs of the reflected zigzag companions, n = 2..6.
STAIRCASE_QR = {
    2: (["1"], []),
    3: (["2"], ["0", "-1/2"]),
    4: (["5", "-1/2"], ["0", "-3/2", "1/6"]),
    5: (["16", "-4", "1/3"], ["0", "-23/4", "4/3", "-1/12"]),
    6: (["61", "-99/4", "25/6", "-5/24"],
        ["0", "-95/4", "497/60", "-25/24", "1/24"]),
}

# The equations satisfied by the zigzag companions, n = 2..6
# (raw reference coefficients; normalization happens at comparison time).
STAIRCASE_EQUATIONS = {
    2: (["0", "1"], ["1", "1"], ["-1"]),
    3: (["0", "4", "1/2"], ["4", "4", "1/2"], ["-6", "-1"]),
    4: (["0", "25", "17/3", "1/3"], ["25", "25", "16/3", "1/3"],
        ["-55", "-14", "-1"]),
    5: (["0", "256", "1073/12", "65/6", "5/12"],
        ["256", "256", "943/12", "10", "5/12"],
        ["-720", "-263", "-110/3", "-5/3"]),
    6: (["0", "3721", "25957/15", "4763/15", "74/3", "2/3"],
        ["3721", "3721", "21194/15", "4023/15", "68/3", "2/3"],
        ["-12871", "-5926", "-3593/3", "-320/3", "-10/3"]),
}

# Cross inner product of the order-3 family at indices 3, 4 (not orthogonal).
R3_CROSS_INNER_3_4 = "4"
