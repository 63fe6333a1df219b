"""Static data: the order-7 automorphism, its replica tables, the built-in
magic configurations, and the 25-type geometric-hyperplane catalog of the
split Cayley hexagon of order two (Frohardt-Johnson classification)."""

# Images of the six weight-one basis observables XII, IXI, IIX, ZII, IZI, IIZ
# under the order-7 automorphism; the linear extension acts on all 63 points.
SIGMA_BASIS_IMAGES = ("XIX", "XXX", "XXI", "ZZI", "ZZZ", "ZIZ")

# Orbit rows of the automorphism: column k is the image of column 0 under
# sigma^k.  First block covers the 18 observables of the 18_2-12_3
# configuration, second block the 16 observables of 2_4 14_2-4_3 6_4.
REPLICA_ROWS_18 = (
    ("XIX", "IXX", "IIX", "XXI", "IXI", "XXX", "XII"),
    ("IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ", "IZZ"),
    ("XII", "XIX", "IXX", "IIX", "XXI", "IXI", "XXX"),
    ("IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ"),
    ("YII", "YZX", "IXY", "ZIY", "XYZ", "IYI", "YYY"),
    ("IYY", "IZX", "YYZ", "ZXI", "YYX", "XIZ", "YIY"),
    ("YIY", "IYY", "IZX", "YYZ", "ZXI", "YYX", "XIZ"),
    ("IYI", "YYY", "YII", "YZX", "IXY", "ZIY", "XYZ"),
    ("IXX", "IIX", "XXI", "IXI", "XXX", "XII", "XIX"),
    ("ZII", "ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ"),
    ("IIX", "XXI", "IXI", "XXX", "XII", "XIX", "IXX"),
    ("ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII"),
    ("YYI", "IXZ", "YXY", "XZZ", "XZX", "ZYY", "ZIX"),
    ("XXI", "IXI", "XXX", "XII", "XIX", "IXX", "IIX"),
    ("IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI"),
    ("IXI", "XXX", "XII", "XIX", "IXX", "IIX", "XXI"),
    ("ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ"),
    ("IIY", "YXZ", "IYZ", "XYX", "YZZ", "YIX", "ZYX"),
)

REPLICA_ROWS_2414 = (
    ("IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ", "IZZ"),
    ("IIY", "YXZ", "IYZ", "XYX", "YZZ", "YIX", "ZYX"),
    ("XII", "XIX", "IXX", "IIX", "XXI", "IXI", "XXX"),
    ("IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ"),
    ("XYY", "XZI", "YZY", "ZXX", "ZZX", "XXZ", "ZXZ"),
    ("XXX", "XII", "XIX", "IXX", "IIX", "XXI", "IXI"),
    ("YXY", "XZZ", "XZX", "ZYY", "ZIX", "YYI", "IXZ"),
    ("ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ"),
    ("IXI", "XXX", "XII", "XIX", "IXX", "IIX", "XXI"),
    ("IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI"),
    ("ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII"),
    ("IIX", "XXI", "IXI", "XXX", "XII", "XIX", "IXX"),
    ("ZII", "ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ"),
    ("YII", "YZX", "IXY", "ZIY", "XYZ", "IYI", "YYY"),
    ("IYI", "YYY", "YII", "YZX", "IXY", "ZIY", "XYZ"),
    ("YYX", "XIZ", "YIY", "IYY", "IZX", "YYZ", "ZXI"),
)

CONFIG_18 = "18_2-12_3"
CONFIG_2414 = "2_4 14_2-4_3 6_4"

BUILTIN_CONFIGS = {
    CONFIG_18: (
        ("IZI", "ZZI", "ZII"),
        ("ZII", "ZIZ", "IIZ"),
        ("IIZ", "IZZ", "IZI"),
        ("IXI", "XXI", "XII"),
        ("XII", "XIX", "IIX"),
        ("IIX", "IXX", "IXI"),
        ("IYI", "YYI", "YII"),
        ("YII", "YIY", "IIY"),
        ("IIY", "IYY", "IYI"),
        ("ZZI", "XXI", "YYI"),
        ("YIY", "XIX", "ZIZ"),
        ("IZZ", "IXX", "IYY"),
    ),
    CONFIG_2414: (
        ("ZIZ", "ZII", "IIZ"),
        ("IIZ", "IZI", "IZZ"),
        ("ZII", "IZI", "ZZI"),
        ("IZZ", "XYY", "XXX"),
        ("IIX", "YII", "IYI", "YYX"),
        ("IYI", "IIY", "XII", "XYY"),
        ("YII", "IIY", "IXI", "YXY"),
        ("IIX", "XII", "IXI", "XXX"),
        ("IZZ", "ZZI", "YXY", "XXX"),
        ("IZZ", "ZIZ", "YYX", "XXX"),
    ),
}

REPLICA_TABLES = {
    CONFIG_18: REPLICA_ROWS_18,
    CONFIG_2414: REPLICA_ROWS_2414,
}

# One record per hyperplane type, in catalog (class) order:
# (type, class, (points, n0, n1, n2, n3), full lines, deep points, copies).
TYPE_TABLE = (
    ("V2", "I", (21, 21, 0, 0, 0), 0, 0, 36),
    ("V7", "II", (23, 16, 6, 0, 1), 3, 1, 126),
    ("V11", "III", (25, 10, 12, 3, 0), 6, 0, 504),
    ("V1", "IV", (27, 0, 27, 0, 0), 9, 0, 28),
    ("V8", "IV", (27, 8, 15, 0, 4), 9, 4, 252),
    ("V13", "IV", (27, 8, 11, 8, 0), 9, 0, 756),
    ("V17", "IV", (27, 6, 15, 6, 0), 9, 0, 1008),
    ("V12", "V", (29, 7, 12, 6, 4), 12, 4, 504),
    ("V18", "V", (29, 5, 12, 12, 0), 12, 0, 1008),
    ("V19", "V", (29, 6, 12, 9, 2), 12, 2, 1008),
    ("V23", "V", (29, 4, 16, 7, 2), 12, 2, 1512),
    ("V6", "VI", (31, 0, 24, 0, 7), 15, 7, 63),
    ("V24", "VI", (31, 4, 12, 12, 3), 15, 3, 1512),
    ("V25", "VI", (31, 4, 12, 12, 3), 15, 3, 2016),
    ("V14", "VII", (33, 4, 8, 17, 4), 18, 4, 756),
    ("V20", "VII", (33, 2, 12, 15, 4), 18, 4, 1008),
    ("V3", "VIII", (35, 0, 21, 0, 14), 21, 14, 36),
    ("V16", "VIII", (35, 0, 13, 16, 6), 21, 6, 756),
    ("V21", "VIII", (35, 2, 9, 18, 6), 21, 6, 1008),
    ("V15", "IX", (37, 1, 8, 20, 8), 24, 8, 756),
    ("V22", "IX", (37, 0, 12, 15, 10), 24, 10, 1008),
    ("V10", "X", (39, 0, 10, 16, 13), 27, 13, 378),
    ("V9", "XI", (43, 0, 3, 24, 16), 33, 16, 252),
    ("V5", "XII", (45, 0, 0, 27, 18), 36, 18, 56),
    ("V4", "XIII", (49, 0, 0, 21, 28), 42, 28, 36),
)

TOTAL_HYPERPLANES = 16383

# Sizes of the two automorphism orbits sharing the colliding signature
# (31; 4, 12, 12, 3): orbit size decides the type.
COLLISION_SIGNATURE = (31, 4, 12, 12, 3)
COLLISION_ORBIT_TYPES = {1512: "V24", 2016: "V25"}
