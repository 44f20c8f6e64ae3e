"""Expected classification data, checked in as radical-notation strings.

Each row of the split-failure tables records a ring parameter D, the input
(a fixed-multiplier triple or a one-parameter family member) and the known
factorization of the first multiplier polynomial that fails to split into
linear factors over R_D.  ``verify_tables`` recomputes every row from
scratch and diffs against these values.

Factor entries are (coefficient strings, multiplicity) with the constant
term first.
"""

# M3 split failures: (D, lambda triple, factors)
M3_ROWS = (
    (1, ("-3-2*i", "-2+i", "-1"), ((("121+40*i", "22+4*i", "1"), 1),)),
    (1, ("-1-4*i", "-1", "-1+i"), ((("5+48*i", "10+12*i", "1"), 1),)),
    (1, ("-1-i", "-3*i", "i"), ((("15-28*i", "12+2*i", "1"), 1),)),
    (1, ("-1", "-i", "1+2*i"), ((("25+8*i", "-2-4*i", "1"), 1),)),
    (
        2,
        ("-1-2*i*sqrt(2)", "-1", "-1+i*sqrt(2)"),
        ((("33+16*i*sqrt(2)", "10+4*i*sqrt(2)", "1"), 1),),
    ),
    (
        3,
        ("-3-2*i*sqrt(3)", "(-3+i*sqrt(3))/2", "-1"),
        ((("79+54*i*sqrt(3)", "20+6*i*sqrt(3)", "1"), 1),),
    ),
    (3, ("-2-i*sqrt(3)", "-2+i*sqrt(3)", "-1"), ((("89", "18", "1"), 1),)),
    (3, ("-1", "-i*sqrt(3)", "i*sqrt(3)"), ((("25", "2", "1"), 1),)),
    (
        7,
        ("(-5-i*sqrt(7))/2", "(-5+i*sqrt(7))/2", "-1"),
        ((("125", "22", "1"), 1),),
    ),
    (
        7,
        ("-2-i*sqrt(7)", "(-3+i*sqrt(7))/2", "-1"),
        ((("67+14*i*sqrt(7)", "16+2*i*sqrt(7)", "1"), 1),),
    ),
    (
        7,
        ("-1", "(-1-i*sqrt(7))/2", "i*sqrt(7)"),
        ((("19-2*i*sqrt(7)", "4-2*i*sqrt(7)", "1"), 1),),
    ),
    (
        15,
        ("(-3-i*sqrt(15))/2", "(-3+i*sqrt(15))/2", "-1"),
        ((("61", "14", "1"), 1),),
    ),
    (
        15,
        ("-1", "(-1-i*sqrt(15))/2", "(-1+i*sqrt(15))/2"),
        ((("29", "6", "1"), 1),),
    ),
)

# M4 split failures: (D, lambda triple, factors)
M4_ROWS = (
    (
        1,
        ("-2-i", "-2*i", "i"),
        ((("-1", "1"), 1), (("41+60*i", "6+12*i", "1"), 1)),
    ),
    (
        1,
        ("-1-2*i", "-1", "-1+2*i"),
        ((("-11", "1"), 1), (("211", "12", "1"), 1)),
    ),
    (
        2,
        ("-2", "-1-i*sqrt(2)", "-1+i*sqrt(2)"),
        ((("-1", "1"), 1), (("37", "2", "1"), 1)),
    ),
    (
        3,
        ("(-7-i*sqrt(3))/2", "-1-i*sqrt(3)", "(-1+i*sqrt(3))/2"),
        (
            (
                (
                    "4267+768*i*sqrt(3)",
                    "(1449+9*i*sqrt(3))/2",
                    "(99-3*i*sqrt(3))/2",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        3,
        ("-2-2*i*sqrt(3)", "(-3-i*sqrt(3))/2", "(-1+i*sqrt(3))/2"),
        (
            (("(1+7*i*sqrt(3))/2", "1"), 1),
            (("(95-17*i*sqrt(3))/2", "5-i*sqrt(3)", "1"), 1),
        ),
    ),
    (
        3,
        ("-2-i*sqrt(3)", "(-1-i*sqrt(3))/2", "i*sqrt(3)"),
        (
            (("8+5*i*sqrt(3)", "1"), 1),
            (("-62+65*i*sqrt(3)", "-19-i*sqrt(3)", "1"), 1),
        ),
    ),
    (
        3,
        ("-2", "(-1-3*i*sqrt(3))/2", "(-1+i*sqrt(3))/2"),
        (
            (
                (
                    "449-302*i*sqrt(3)",
                    "(261-19*i*sqrt(3))/2",
                    "(39-7*i*sqrt(3))/2",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        3,
        ("-1", "(-1-i*sqrt(3))/2", "1+2*i*sqrt(3)"),
        (
            (
                (
                    "103+1392*i*sqrt(3)",
                    "-297-132*i*sqrt(3)",
                    "33-12*i*sqrt(3)",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        3,
        ("(-1-i*sqrt(3))/2", "(1+i*sqrt(3))/2", "1-i*sqrt(3)"),
        (
            (
                (
                    "883+624*i*sqrt(3)",
                    "(-423+39*i*sqrt(3))/2",
                    "(27+27*i*sqrt(3))/2",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        7,
        ("-3", "(-1-i*sqrt(7))/2", "(-1+i*sqrt(7))/2"),
        ((("587", "187", "25", "1"), 1),),
    ),
    (
        7,
        ("-1", "(1-i*sqrt(7))/2", "(1+i*sqrt(7))/2"),
        ((("-413", "-5", "1", "1"), 1),),
    ),
)

# M5 split failures: (D, lambda triple, factors), all squared cubics
M5_ROWS = (
    (
        1,
        ("-2-i", "-2-i", "-1+i"),
        ((("758+1703*i", "33+188*i", "10+23*i", "1"), 2),),
    ),
    (
        1,
        ("-1-2*i", "-1-2*i", "i"),
        ((("605-11584*i", "-633-640*i", "-5+32*i", "1"), 2),),
    ),
    (
        1,
        ("-i", "-i", "1+i"),
        ((("-700+1699*i", "-171-176*i", "4+31*i", "1"), 2),),
    ),
    (
        2,
        ("-1-i*sqrt(2)", "-1-i*sqrt(2)", "i*sqrt(2)"),
        ((("3-343*i*sqrt(2)", "-27-42*i*sqrt(2)", "3+3*i*sqrt(2)", "1"), 2),),
    ),
    (
        3,
        ("-2-i*sqrt(3)", "-2-i*sqrt(3)", "(-1+i*sqrt(3))/2"),
        (
            (
                (
                    "-8380+2709*i*sqrt(3)",
                    "-573+36*i*sqrt(3)",
                    "-12-21*i*sqrt(3)",
                    "1",
                ),
                2,
            ),
        ),
    ),
    (
        3,
        ("(-3-i*sqrt(3))/2", "(-3-i*sqrt(3))/2", "-1+i*sqrt(3)"),
        (
            (
                (
                    "-320-709*i*sqrt(3)",
                    "(-87-169*i*sqrt(3))/2",
                    "(15-5*i*sqrt(3))/2",
                    "1",
                ),
                2,
            ),
        ),
    ),
    (
        3,
        ("(-1-i*sqrt(3))/2", "(-1-i*sqrt(3))/2", "1+i*sqrt(3)"),
        (
            (
                (
                    "-577-720*i*sqrt(3)",
                    "(-147+45*i*sqrt(3))/2",
                    "(3-3*i*sqrt(3))/2",
                    "1",
                ),
                2,
            ),
        ),
    ),
    (
        3,
        ("-i*sqrt(3)", "-i*sqrt(3)", "(1+i*sqrt(3))/2"),
        (
            (
                (
                    "-7742+4897*i*sqrt(3)",
                    "-1329-232*i*sqrt(3)",
                    "42-29*i*sqrt(3)",
                    "1",
                ),
                2,
            ),
        ),
    ),
)

# M4 split failures in the superattracting family z^2 + c: (D, c, factors)
M4_SUPER_ROWS = (
    (1, "-3/4", ((("-5221", "939", "-39", "1"), 1),)),
    (1, "1/2", ((("-8896", "784", "-44", "1"), 1),)),
    (2, "1/4", ((("-4861", "779", "-47", "1"), 1),)),
    (
        3,
        "(-1-3*i*sqrt(3))/8",
        (
            (
                (
                    "-2983-1218*i*sqrt(3)",
                    "(1177+15*i*sqrt(3))/2",
                    "(-109+3*i*sqrt(3))/2",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        3,
        "(-1+3*i*sqrt(3))/8",
        (
            (
                (
                    "-2983+1218*i*sqrt(3)",
                    "(1177-15*i*sqrt(3))/2",
                    "(-109-3*i*sqrt(3))/2",
                    "1",
                ),
                1,
            ),
        ),
    ),
)

# M4 split failures in the multiple-fixed-point family g_{a,1}: (D, a, factors)
M4_MULTIPLE_ROWS = (
    (2, "-1", ((("-1457", "255", "-15", "1"), 1),)),
    (2, "0", ((("-4861", "779", "-47", "1"), 1),)),
    (
        3,
        "(-1-i*sqrt(3))/2",
        (
            (
                (
                    "-1279+542*i*sqrt(3)",
                    "99-124*i*sqrt(3)",
                    "-21+14*i*sqrt(3)",
                    "1",
                ),
                1,
            ),
        ),
    ),
    (
        3,
        "(-1+i*sqrt(3))/2",
        (
            (
                (
                    "-1279-542*i*sqrt(3)",
                    "99+124*i*sqrt(3)",
                    "-21-14*i*sqrt(3)",
                    "1",
                ),
                1,
            ),
        ),
    ),
)

# The eight exceptional torus-quotient maps of degree 2: lattice, quotient
# order n, translation data (a, b) and fixed-point multipliers.
LATTES_ROWS = (
    ("Z[i]", 2, "1-i", "0", ("-1+i", "-1+i", "-2*i"), 1),
    ("Z[i]", 2, "1+i", "0", ("-1-i", "-1-i", "2*i"), 1),
    ("Z[i]", 4, "1+i", "0", ("-4", "-1-i", "-1+i"), 1),
    ("Z[i*sqrt(2)]", 2, "i*sqrt(2)", "0", ("-2", "-i*sqrt(2)", "i*sqrt(2)"), 2),
    (
        "Z[(1+i*sqrt(7))/2]",
        2,
        "(1-i*sqrt(7))/2",
        "0",
        ("(-3-i*sqrt(7))/2", "(-3-i*sqrt(7))/2", "(-1+i*sqrt(7))/2"),
        7,
    ),
    (
        "Z[(1+i*sqrt(7))/2]",
        2,
        "(1-i*sqrt(7))/2",
        "1/2",
        ("(-1+i*sqrt(7))/2", "(-1+i*sqrt(7))/2", "(1-i*sqrt(7))/2"),
        7,
    ),
    (
        "Z[(1+i*sqrt(7))/2]",
        2,
        "(1+i*sqrt(7))/2",
        "0",
        ("(-3+i*sqrt(7))/2", "(-3+i*sqrt(7))/2", "(-1-i*sqrt(7))/2"),
        7,
    ),
    (
        "Z[(1+i*sqrt(7))/2]",
        2,
        "(1+i*sqrt(7))/2",
        "1/2",
        ("(-1-i*sqrt(7))/2", "(-1-i*sqrt(7))/2", "(1+i*sqrt(7))/2"),
        7,
    ),
)

# expected triple counts for the unit-fraction enumeration
TRIPLE_COUNTS = {1: 23, 2: 9, 3: 27, 7: 14, 11: 3, 15: 5}
GENERIC_TRIPLE_COUNT = 3
