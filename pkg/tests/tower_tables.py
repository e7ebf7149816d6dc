"""Reference Koszul tower tables: R -> (dimensions left to right, Euler characteristic)."""

TOWERS = {
    (3, 2): {
        0: ((1,), 1),
        1: ((3,), 3),
        2: ((3, 6), 3),
        3: ((9, 10), 1),
        4: ((3, 18, 15), 0),
        5: ((9, 30, 21), 0),
        6: ((1, 18, 45, 28), 0),
        7: ((3, 30, 63, 36), 0),
    },
    (3, 3): {
        0: ((1,), 1),
        1: ((3,), 3),
        2: ((6,), 6),
        3: ((3, 10), 7),
        4: ((9, 15), 6),
        5: ((18, 21), 3),
        6: ((3, 30, 28), 1),
        7: ((9, 45, 36), 0),
        8: ((18, 63, 45), 0),
        9: ((1, 30, 84, 55), 0),
        10: ((3, 45, 108, 66), 0),
        11: ((6, 63, 135, 78), 0),
    },
    (3, 4): {
        0: ((1,), 1),
        1: ((3,), 3),
        2: ((6,), 6),
        3: ((10,), 10),
        4: ((3, 15), 12),
        5: ((9, 21), 12),
        6: ((18, 28), 10),
        7: ((30, 36), 6),
        8: ((3, 45, 45), 3),
        9: ((9, 63, 55), 1),
        10: ((18, 84, 66), 0),
        11: ((30, 108, 78), 0),
    },
    (4, 2): {
        0: ((1,), 1),
        1: ((4,), 4),
        2: ((4, 10), 6),
        3: ((16, 20), 4),
        4: ((6, 40, 35), 1),
        5: ((24, 80, 56), 0),
        6: ((4, 60, 140, 84), 0),
        7: ((16, 120, 224, 120), 0),
    },
    (4, 3): {
        0: ((1,), 1),
        1: ((4,), 4),
        2: ((10,), 10),
        3: ((4, 20), 16),
        4: ((16, 35), 19),
        5: ((40, 56), 16),
        6: ((6, 80, 84), 10),
        7: ((24, 140, 120), 4),
        8: ((60, 224, 165), 1),
        9: ((4, 120, 336, 220), 0),
        10: ((16, 210, 480, 286), 0),
        11: ((40, 336, 660, 364), 0),
        12: ((1, 80, 504, 880, 455), 0),
        13: ((4, 140, 720, 1144, 560), 0),
        14: ((10, 224, 990, 1456, 680), 0),
    },
    (4, 4): {
        0: ((1,), 1),
        1: ((4,), 4),
        2: ((10,), 10),
        3: ((20,), 20),
        4: ((4, 35), 31),
        5: ((16, 56), 40),
        6: ((40, 84), 44),
        7: ((80, 120), 40),
        8: ((6, 140, 165), 31),
        9: ((24, 224, 220), 20),
        10: ((60, 336, 286), 10),
        11: ((120, 480, 364), 4),
        12: ((4, 210, 660, 455), 1),
        13: ((16, 336, 880, 560), 0),
        14: ((40, 504, 1144, 680), 0),
    },
    (5, 2): {
        0: ((1,), 1),
        1: ((5,), 5),
        2: ((5, 15), 10),
        3: ((25, 35), 10),
        4: ((10, 75, 70), 5),
        5: ((50, 175, 126), 1),
        6: ((10, 150, 350, 210), 0),
        7: ((50, 350, 630, 330), 0),
    },
}

# spaces column of the 3|2 table, as (p, q) pairs left to right
SPACES_3_2 = {
    0: ((0, 0),),
    1: ((1, 0),),
    2: ((0, 1), (2, 0)),
    3: ((1, 1), (3, 0)),
    4: ((0, 2), (2, 1), (4, 0)),
    5: ((1, 2), (3, 1), (5, 0)),
    6: ((0, 3), (2, 2), (4, 1), (6, 0)),
    7: ((1, 3), (3, 2), (5, 1), (7, 0)),
}
