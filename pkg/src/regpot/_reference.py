"""Reference coefficient tables for the certification chains."""

# exact integer coefficient dictionaries, exponent tuple -> coefficient

K4_F1 = {
    (0, 3): 2,
    (0, 4): -1,
    (1, 1): 2,
    (1, 2): -1,
    (1, 3): -2,
    (2, 0): 2,
    (3, 0): 3,
    (3, 1): 2,
    (4, 0): 1,
}

K4_F2 = {
    (0, 4): 2,
    (0, 5): -1,
    (1, 2): 6,
    (1, 3): -1,
    (1, 4): -3,
    (2, 2): -3,
    (2, 3): -2,
    (3, 0): 2,
    (3, 1): 5,
    (3, 2): 2,
    (4, 0): 5,
    (4, 1): 3,
    (5, 0): 1,
}

K4_D1 = {
    (0, 3): 6,
    (0, 4): -1,
    (0, 5): -3,
    (1, 1): 12,
    (1, 2): 4,
    (1, 3): -13,
    (1, 4): -7,
    (2, 0): 20,
    (2, 1): 14,
    (2, 2): 7,
    (2, 3): 2,
    (3, 0): 48,
    (3, 1): 49,
    (3, 2): 18,
    (4, 0): 30,
    (4, 1): 17,
    (5, 0): 5,
}

K4_D2 = {
    (0, 2): 6,
    (0, 3): -1,
    (0, 4): -3,
    (1, 2): -6,
    (1, 3): -4,
    (2, 0): 6,
    (2, 1): 15,
    (2, 2): 6,
    (3, 0): 20,
    (3, 1): 12,
    (4, 0): 5,
}

K4_G1 = {
    (0, 1): 12,
    (0, 2): 4,
    (0, 3): -13,
    (0, 4): -7,
    (1, 0): 40,
    (1, 1): 28,
    (1, 2): 14,
    (1, 3): 4,
    (2, 0): 144,
    (2, 1): 147,
    (2, 2): 54,
    (3, 0): 120,
    (3, 1): 68,
    (4, 0): 25,
}

K4_G2 = {
    (0, 2): 12,
    (0, 3): 4,
    (0, 4): -13,
    (0, 5): -7,
    (1, 2): -18,
    (1, 3): -13,
    (1, 4): -3,
    (2, 0): 60,
    (2, 1): 180,
    (2, 2): 183,
    (2, 3): 58,
    (3, 0): 298,
    (3, 1): 353,
    (3, 2): 122,
    (4, 0): 170,
    (4, 1): 93,
    (5, 0): 25,
}

K4_H1 = {
    (0, 1): 24,
    (0, 2): 60,
    (0, 3): 6,
    (0, 4): -13,
    (0, 5): -3,
    (1, 0): 240,
    (1, 1): 300,
    (1, 2): 460,
    (1, 3): 347,
    (1, 4): 113,
    (2, 0): 1520,
    (2, 1): 2246,
    (2, 2): 1663,
    (2, 3): 482,
    (3, 0): 2112,
    (3, 1): 2233,
    (3, 2): 738,
    (4, 0): 930,
    (4, 1): 497,
    (5, 0): 125,
}

K4_H2 = {
    (0, 2): -18,
    (0, 3): -13,
    (0, 4): -3,
    (1, 0): 120,
    (1, 1): 360,
    (1, 2): 366,
    (1, 3): 116,
    (2, 0): 894,
    (2, 1): 1059,
    (2, 2): 366,
    (3, 0): 680,
    (3, 1): 372,
    (4, 0): 125,
}

K4_L1 = {
    (0, 0): 240,
    (0, 1): 300,
    (0, 2): 460,
    (0, 3): 347,
    (0, 4): 113,
    (1, 0): 3040,
    (1, 1): 4492,
    (1, 2): 3326,
    (1, 3): 964,
    (2, 0): 6336,
    (2, 1): 6699,
    (2, 2): 2214,
    (3, 0): 3720,
    (3, 1): 1988,
    (4, 0): 625,
}

K4_L2 = {
    (0, 2): 84,
    (0, 3): 316,
    (0, 4): 347,
    (0, 5): 113,
    (1, 0): 720,
    (1, 1): 2520,
    (1, 2): 5046,
    (1, 3): 3899,
    (1, 4): 1077,
    (2, 0): 9180,
    (2, 1): 15780,
    (2, 2): 11727,
    (2, 3): 3178,
    (3, 0): 12202,
    (3, 1): 13145,
    (3, 2): 4202,
    (4, 0): 4970,
    (4, 1): 2613,
    (5, 0): 625,
}

K4_L4 = {
    (0, 2): 14400,
    (0, 3): 36000,
    (0, 4): 75936,
    (0, 5): 97368,
    (0, 6): 78972,
    (0, 7): 37188,
    (0, 8): 8136,
    (1, 0): 57600,
    (1, 1): 172800,
    (1, 2): 717360,
    (1, 3): 1373400,
    (1, 4): 1732428,
    (1, 5): 1360314,
    (1, 6): 599454,
    (1, 7): 111444,
    (2, 0): 1344000,
    (2, 1): 3838560,
    (2, 2): 8437260,
    (2, 3): 11062920,
    (2, 4): 8495031,
    (2, 5): 3499083,
    (2, 6): 595986,
    (3, 0): 9342880,
    (3, 1): 24217360,
    (3, 2): 32546720,
    (3, 3): 24561680,
    (3, 4): 9950080,
    (3, 5): 1694280,
    (4, 0): 17918380,
    (4, 1): 37038224,
    (4, 2): 34271234,
    (4, 3): 15627870,
    (4, 4): 2862630,
    (5, 0): 15343236,
    (5, 1): 23700982,
    (5, 2): 13930330,
    (5, 3): 2982516,
    (6, 0): 6445963,
    (6, 1): 6618363,
    (6, 2): 1887294,
    (7, 0): 1302640,
    (7, 1): 667056,
    (8, 0): 101250,
}

GK_F1 = {
    (0, 4, 1): -16,
    (0, 4, 2): 8,
    (0, 5, 0): 32,
    (0, 5, 1): -16,
    (1, 2, 2): -20,
    (1, 2, 3): 8,
    (1, 3, 1): 8,
    (1, 3, 2): -4,
    (1, 4, 0): 160,
    (1, 4, 1): -96,
    (1, 4, 2): 8,
    (2, 0, 3): -4,
    (2, 0, 4): 1,
    (2, 2, 1): 120,
    (2, 2, 2): -84,
    (2, 2, 3): 12,
    (2, 3, 0): 320,
    (2, 3, 1): -224,
    (2, 3, 2): 32,
    (3, 0, 2): 20,
    (3, 0, 3): -20,
    (3, 0, 4): 4,
    (3, 1, 1): 152,
    (3, 1, 2): -124,
    (3, 1, 3): 24,
    (3, 2, 0): 320,
    (3, 2, 1): -256,
    (3, 2, 2): 48,
    (4, 0, 1): 56,
    (4, 0, 2): -52,
    (4, 0, 3): 12,
    (4, 1, 0): 160,
    (4, 1, 1): -144,
    (4, 1, 2): 32,
    (5, 0, 0): 32,
    (5, 0, 1): -32,
    (5, 0, 2): 8,
}

GK_F2 = {
    (0, 3, 1): -16,
    (0, 3, 2): 8,
    (0, 4, 0): 32,
    (0, 4, 1): -16,
    (1, 1, 2): -12,
    (1, 1, 3): 4,
    (1, 2, 1): 8,
    (1, 2, 2): -4,
    (1, 3, 0): 128,
    (1, 3, 1): -80,
    (1, 3, 2): 8,
    (2, 0, 2): 4,
    (2, 1, 1): 64,
    (2, 1, 2): -48,
    (2, 1, 3): 8,
    (2, 2, 0): 192,
    (2, 2, 1): -144,
    (2, 2, 2): 24,
    (3, 0, 1): 40,
    (3, 0, 2): -36,
    (3, 0, 3): 8,
    (3, 1, 0): 128,
    (3, 1, 1): -112,
    (3, 1, 2): 24,
    (4, 0, 0): 32,
    (4, 0, 1): -32,
    (4, 0, 2): 8,
}

P3_L1 = {
    (0, 0): 15360,
    (0, 1): 8640,
    (0, 2): 41400,
    (0, 3): 33102,
    (0, 4): 9153,
    (1, 0): 508800,
    (1, 1): 598896,
    (1, 2): 350460,
    (1, 3): 78084,
    (2, 0): 894888,
    (2, 1): 719118,
    (2, 2): 179334,
    (3, 0): 401760,
    (3, 1): 161028,
    (4, 0): 50625,
}

P3_L2 = {
    (0, 1): -55296,
    (0, 2): 5184,
    (0, 3): 93096,
    (0, 4): 99306,
    (0, 5): 27459,
    (1, 0): 691200,
    (1, 1): 1347840,
    (1, 2): 2056104,
    (1, 3): 1223910,
    (1, 4): 261711,
    (2, 0): 5400000,
    (2, 1): 6754104,
    (2, 2): 3760182,
    (2, 3): 772254,
    (3, 0): 5288760,
    (3, 1): 4245858,
    (3, 2): 1021086,
    (4, 0): 1610280,
    (4, 1): 634959,
    (5, 0): 151875,
}

K8_LPRIME0 = {
    (2,): -368640,
    (3,): -694272,
    (4,): 29184,
    (5,): -121728,
    (6,): -9792,
    (7,): 12672,
}

GK_FACTOR = {
    (1, 4): -24,
    (2, 3): -144,
    (2, 4): -24,
    (3, 3): -288,
    (3, 4): 48,
}
