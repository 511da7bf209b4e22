"""Verification and search of shelling and strong shelling orders.

Orders are sequences of canonical facet indices; earlier means "precedes".
"""

from __future__ import annotations

from typing import Sequence

from .complex import ComplexError, SimplicialComplex, _complex
from .search import SearchResult, prefix_search

__all__ = [
    "OrderError",
    "check_permutation",
    "is_shelling_order",
    "is_strong_shelling_order",
    "search_shelling",
    "search_strong_shelling",
    "find_shelling_order",
    "find_strong_shelling_order",
    "strong_witness",
    "WitnessRule",
    "strong_rule",
    "shelling_rule",
    "is_dimension_decreasing",
    "induced_dimension_order",
    "dimension_decreasing_reorder",
    "relative_inverse_pairs",
    "interval_subcomplex",
    "subcomplex",
]


class OrderError(ValueError):
    """An order is not a permutation of the facet indices, or violates a precondition."""


def check_permutation(order: Sequence[int], size: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(size)):
        raise OrderError(f"{list(order)} is not a permutation of 0..{size - 1}")
    return order


def _require_nonvoid(cx: SimplicialComplex) -> None:
    if cx.is_void:
        raise ComplexError("the void complex {∅} has no shellability question")


def _shelling_pair_ok(fi: int, fj: int, earlier: Sequence[int]) -> bool:
    for fk in earlier:
        diff = fj & ~fk
        if diff.bit_count() == 1 and diff & fi == 0:
            return True
    return False


def strong_witness(fi: int, fj: int, earlier: Sequence[int]) -> int | None:
    """First facet mask among ``earlier`` witnessing the pair ``fi`` before ``fj``."""
    lo, hi = fi & fj, fi | fj
    for fk in earlier:
        if (fj & ~fk).bit_count() == 1 and lo & fk == lo and fk & ~hi == 0:
            return fk
    return None


def is_shelling_order(cx: SimplicialComplex, order: Sequence[int]) -> bool:
    """Every later facet meets the earlier ones in a pure codimension-one complex."""
    order = check_permutation(order, len(cx))
    fs = [cx.facets[i] for i in order]
    for j in range(1, len(fs)):
        earlier = fs[:j]
        if not all(_shelling_pair_ok(fs[i], fs[j], earlier) for i in range(j)):
            return False
    return True


def is_strong_shelling_order(cx: SimplicialComplex, order: Sequence[int]) -> bool:
    order = check_permutation(order, len(cx))
    fs = [cx.facets[i] for i in order]
    for j in range(1, len(fs)):
        earlier = fs[:j]
        for i in range(j):
            if strong_witness(fs[i], fs[j], earlier) is None:
                return False
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _one_step_neighbors(facets: Sequence[int]) -> list[int]:
    """``nbrs[g]`` is the mask of every ``k`` with ``|F_g \\ F_k| = 1``."""
    out = []
    for g, fg in enumerate(facets):
        m = 0
        for k, fk in enumerate(facets):
            if k != g and (fg & ~fk).bit_count() == 1:
                m |= 1 << k
        out.append(m)
    return out


class WitnessRule:
    """Step rule for order searches where each earlier facet needs a witness.

    ``pair_ok(fi, fg, fk)`` says whether ``F_k`` (already one step from
    ``F_g``) witnesses the pair ``F_i`` before ``F_g``.  Witness sets are
    cached per pair as bit masks over facet indices.
    """

    def __init__(self, facets: Sequence[int], pair_ok):
        self.facets = tuple(facets)
        self.size = len(self.facets)
        self.nbrs = _one_step_neighbors(self.facets)
        self.pair_ok = pair_ok
        self._cache: dict[int, int] = {}

    def witnesses(self, i: int, g: int) -> int:
        key = i * self.size + g
        m = self._cache.get(key)
        if m is None:
            fi, fg = self.facets[i], self.facets[g]
            m = 0
            for k in _bits(self.nbrs[g]):
                if self.pair_ok(fi, fg, self.facets[k]):
                    m |= 1 << k
            self._cache[key] = m
        return m

    def can_append(self, placed: int, g: int) -> bool:
        return all(self.witnesses(i, g) & placed for i in _bits(placed))

    def feasible(self, placed: int) -> bool:
        """Least-fixpoint check that every unplaced facet could ever be appended.

        A facet appended later needs, for each facet of ``placed``, a witness
        placed before it; facets that cannot obtain one through a chain of
        such justifications make the prefix set dead.
        """
        reach = placed
        pending = [g for g in range(self.size) if not placed >> g & 1]
        earlier = list(_bits(placed))
        while pending:
            stuck = []
            for g in pending:
                if all(self.witnesses(i, g) & reach for i in earlier):
                    reach |= 1 << g
                else:
                    stuck.append(g)
            if len(stuck) == len(pending):
                return False
            pending = stuck
        return True


def _strong_pair(fi: int, fg: int, fk: int) -> bool:
    lo = fi & fg
    return lo & fk == lo and fk & ~(fi | fg) == 0


def _shelling_pair(fi: int, fg: int, fk: int) -> bool:
    return (fg & ~fk) & fi == 0


def strong_rule(facets: Sequence[int]) -> WitnessRule:
    return WitnessRule(facets, _strong_pair)


def shelling_rule(facets: Sequence[int]) -> WitnessRule:
    return WitnessRule(facets, _shelling_pair)


def _run(cx: SimplicialComplex, rule: WitnessRule, max_nodes, candidates=None) -> SearchResult:
    return prefix_search(
        len(cx), rule.can_append, feasible=rule.feasible, candidates=candidates, max_nodes=max_nodes
    )


def search_shelling(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    _require_nonvoid(cx)
    res = _run(cx, shelling_rule(cx.facets), max_nodes)
    if res.found:
        assert is_shelling_order(cx, res.order)
    return res


def search_strong_shelling(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    """Lexicographically first strong shelling order, or a NO/UNDECIDED verdict."""
    _require_nonvoid(cx)
    res = _run(cx, strong_rule(cx.facets), max_nodes)
    if res.found:
        assert is_strong_shelling_order(cx, res.order)
    return res


def find_shelling_order(cx: SimplicialComplex, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_shelling(cx, max_nodes).unwrap()


def find_strong_shelling_order(cx: SimplicialComplex, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_strong_shelling(cx, max_nodes).unwrap()


def is_dimension_decreasing(cx: SimplicialComplex, order: Sequence[int]) -> bool:
    dims = [cx.facet_dim(i) for i in order]
    return all(a >= b for a, b in zip(dims, dims[1:]))


def induced_dimension_order(cx: SimplicialComplex, order: Sequence[int]) -> tuple[int, ...]:
    """Stable sort by decreasing dimension; ties keep their relative order."""
    order = check_permutation(order, len(cx))
    return tuple(sorted(order, key=lambda i: -cx.facet_dim(i)))


def dimension_decreasing_reorder(cx: SimplicialComplex, order: Sequence[int]) -> tuple[int, ...]:
    if not is_strong_shelling_order(cx, order):
        raise OrderError("input is not a strong shelling order")
    out = induced_dimension_order(cx, order)
    assert is_strong_shelling_order(cx, out)
    return out


def relative_inverse_pairs(
    cx: SimplicialComplex, order1: Sequence[int], order2: Sequence[int]
) -> set[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``a`` before ``b`` in the dimension order induced by
    ``order1`` but ``b`` before ``a`` in ``order2``."""
    try:
        order1 = check_permutation(order1, len(cx))
        order2 = check_permutation(order2, len(cx))
    except OrderError as exc:
        raise OrderError(f"orders are not over the same facet set: {exc}") from None
    ref = induced_dimension_order(cx, order1)
    pos2 = {f: p for p, f in enumerate(order2)}
    out = set()
    for p, a in enumerate(ref):
        for b in ref[p + 1:]:
            if pos2[b] < pos2[a]:
                out.add((a, b))
    return out


def subcomplex(cx: SimplicialComplex, indices) -> SimplicialComplex:
    """Complex generated by the facets at the given canonical indices."""
    return _complex(cx.n, (cx.facets[i] for i in indices))


def interval_subcomplex(cx: SimplicialComplex, order: Sequence[int], first: int, last: int) -> SimplicialComplex:
    """Complex generated by the facets from ``first`` through ``last`` in ``order``.

    ``first`` and ``last`` are canonical facet indices.
    """
    order = check_permutation(order, len(cx))
    pos = {f: p for p, f in enumerate(order)}
    a, b = pos[first], pos[last]
    if b < a:
        raise OrderError(f"facet {last} precedes facet {first} in the order")
    return subcomplex(cx, order[a:b + 1])
