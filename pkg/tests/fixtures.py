"""Named complexes used throughout the test suite.

Each entry is ``(facets, n)`` with facets in the order they are usually
written down; several tests depend on that listed order.
"""

from __future__ import annotations

from shellab.complex import SimplicialComplex, from_facets


def _sets(*words: str) -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in w) for w in words]


PATH4 = (_sets("123", "234", "345", "456"), 6)
PATH5 = (_sets("123", "234", "345", "456", "567"), 7)
MIXED = (_sets("1245", "123", "456"), 6)
NOT_HEREDITARY = (_sets("128", "125", "256", "124", "127", "134", "126", "123"), 8)
NOT_QUASI_HARMONIOUS = (_sets("34567", "24567", "23567", "23467", "2345", "167"), 7)
HEREDITARILY_SS = (_sets("123", "124", "125", "126", "134", "135", "136", "245"), 6)
HEXAGON = (_sets("1234", "2345", "3456", "4567", "1467", "1247"), 7)
WEAKLY_MATROID_NOT_SS = (_sets("126", "134", "146", "235", "256", "345", "346", "356"), 6)
SHIFTED_NONPURE = (
    _sets("12", "136", "146", "156", "236", "246", "256", "345", "346", "356", "456"),
    6,
)
EDGE_PATH = (_sets("12", "23", "34", "45"), 5)
QUASI_HARMONIOUS = (_sets("2356", "123", "234", "345", "456"), 6)
CYCLE_MATROID = (_sets("124", "134", "234", "125", "135", "235", "145", "245"), 5)
NONPURE_TRIPLE = ([(1, 2, 3, 4), (4, 5, 6), (1, 2, 3, 5, 6, 7)], 7)


def _grid76() -> tuple[list[tuple[int, ...]], int]:
    # a_i -> i, b_i -> 4 + i, c_i -> 8 + i
    a = {i: i for i in range(1, 5)}
    b = {i: 4 + i for i in range(1, 5)}
    c = {i: 8 + i for i in range(1, 5)}
    facets = [(a[i], b[j], c[k]) for i in range(1, 5) for j in range(1, 5) for k in range(1, 5)]
    extra = [
        (a[2], b[1], b[2]), (a[2], a[3], b[2]), (a[3], b[2], b[3]), (a[3], a[4], b[3]),
        (b[1], c[1], c[2]), (b[1], b[4], c[2]), (b[4], c[2], c[3]), (b[4], b[2], c[3]),
        (c[1], a[3], a[1]), (c[1], c[4], a[1]), (c[4], a[1], a[4]), (c[4], c[2], a[4]),
    ]
    return facets + extra, 12


GRID76 = _grid76()


def build(fixture) -> SimplicialComplex:
    facets, n = fixture
    return from_facets(facets, n)


def listed_order(fixture) -> tuple[int, ...]:
    """Canonical indices of the fixture's facets in their written order."""
    cx = build(fixture)
    return tuple(cx.index_of(f) for f in fixture[0])


SS_FIXTURES = {
    "path4": PATH4,
    "mixed": MIXED,
    "not_hereditary": NOT_HEREDITARY,
    "not_quasi_harmonious": NOT_QUASI_HARMONIOUS,
    "grid76": GRID76,
    "hereditarily_ss": HEREDITARILY_SS,
    "quasi_harmonious": QUASI_HARMONIOUS,
    "cycle_matroid": CYCLE_MATROID,
}

NOT_SS_FIXTURES = {
    "path5": PATH5,
    "hexagon": HEXAGON,
    "weakly_matroid_not_ss": WEAKLY_MATROID_NOT_SS,
    "shifted_nonpure": SHIFTED_NONPURE,
}
