import itertools

import pytest
from hypothesis import given, settings

from fixtures import (
    GRID76, HEXAGON, MIXED, NOT_HEREDITARY, NOT_SS_FIXTURES, PATH4, PATH5, SS_FIXTURES,
    build, listed_order,
)
from oracles import brute_first, is_shelling_definition, is_sso_literal, sets_of, small_complexes
from shellab.complex import (
    ComplexError, complement_complex, expansion, from_facets, join, link, pure_part,
    pure_skeleton,
)
from shellab.search import BudgetExceeded, Status
from shellab.shelling import (
    OrderError, dimension_decreasing_reorder, find_shelling_order, find_strong_shelling_order,
    induced_dimension_order, interval_subcomplex, is_dimension_decreasing, is_shelling_order,
    is_strong_shelling_order, relative_inverse_pairs, search_strong_shelling, subcomplex,
)

ALL = {**SS_FIXTURES, **NOT_SS_FIXTURES}


def is_ss(cx):
    return find_strong_shelling_order(cx) is not None


def test_verifier_examples():
    single = from_facets([(1, 2, 3)], 3)
    assert is_shelling_order(single, (0,)) and is_strong_shelling_order(single, (0,))
    assert is_shelling_order(build(PATH4), listed_order(PATH4))
    two = from_facets([(1, 2), (3, 4)], 4)
    assert not is_shelling_order(two, (0, 1)) and not is_shelling_order(two, (1, 0))
    assert is_strong_shelling_order(build(NOT_HEREDITARY), listed_order(NOT_HEREDITARY))
    assert not is_strong_shelling_order(build(PATH5), listed_order(PATH5))


def test_verifier_rejects_non_permutation():
    cx = build(PATH4)
    with pytest.raises(OrderError):
        is_strong_shelling_order(cx, (0, 1, 2))
    with pytest.raises(OrderError):
        is_shelling_order(cx, (0, 0, 1, 2))


def test_void_complex_rejected_by_search():
    with pytest.raises(ComplexError):
        find_strong_shelling_order(from_facets([()], 2))


@pytest.mark.parametrize("name", sorted(SS_FIXTURES))
def test_ss_fixtures_found(name):
    cx = build(SS_FIXTURES[name])
    order = find_strong_shelling_order(cx)
    assert order is not None and is_strong_shelling_order(cx, order)
    assert is_shelling_order(cx, order)


@pytest.mark.parametrize("name", sorted(NOT_SS_FIXTURES))
def test_not_ss_fixtures(name):
    assert find_strong_shelling_order(build(NOT_SS_FIXTURES[name])) is None


def test_hexagon_has_no_shelling_order_at_all():
    # h = (1, 3, 3, -1, 0) already rules out plain shellability
    cx = build(HEXAGON)
    assert find_shelling_order(cx) is None
    assert brute_first(cx, is_shelling_definition) is None


def test_path5_is_shellable_but_not_strongly():
    cx = build(PATH5)
    assert find_shelling_order(cx) == listed_order(PATH5)


def test_grid76_search_is_fast_and_verified():
    cx = build(GRID76)
    res = search_strong_shelling(cx)
    assert res.status is Status.YES and len(res.order) == 76
    assert res.nodes < 10_000


def test_budget_gives_undecided():
    res = search_strong_shelling(build(NOT_SS_FIXTURES["shifted_nonpure"]), max_nodes=5)
    assert res.status is Status.UNDECIDED
    with pytest.raises(BudgetExceeded):
        res.unwrap()


def test_dimension_reorder_examples():
    cx = build(MIXED)
    order = listed_order(MIXED)
    assert dimension_decreasing_reorder(cx, order) == order
    # put the big facet last; still a strong shelling order
    late = (cx.index_of((1, 2, 3)), cx.index_of((4, 5, 6)))
    late = late + (cx.index_of((1, 2, 4, 5)),)
    assert not is_strong_shelling_order(cx, late)
    with pytest.raises(OrderError):
        dimension_decreasing_reorder(cx, late)


def test_dimension_reorder_moves_late_large_facet():
    cx = from_facets([(1, 3, 5), (3, 4), (1, 2, 5)], 5)
    order = tuple(cx.index_of(f) for f in [(1, 3, 5), (3, 4), (1, 2, 5)])
    assert is_strong_shelling_order(cx, order) and not is_dimension_decreasing(cx, order)
    out = dimension_decreasing_reorder(cx, order)
    assert out == tuple(cx.index_of(f) for f in [(1, 3, 5), (1, 2, 5), (3, 4)])
    assert is_strong_shelling_order(cx, out)


def test_relative_inverse_pairs():
    cx = build(NOT_HEREDITARY)
    order = listed_order(NOT_HEREDITARY)
    assert relative_inverse_pairs(cx, order, induced_dimension_order(cx, order)) == set()
    mixed = from_facets([(1, 2), (2, 3, 4), (3, 4, 5)], 5)
    o = (0, 1, 2)
    inv = relative_inverse_pairs(mixed, o, o)
    expected = {(a, b) for a in range(3) for b in range(3)
                if o.index(b) < o.index(a) and mixed.facet_dim(b) < mixed.facet_dim(a)}
    assert inv == expected
    # swap the adjacent dimension-increasing pair
    small, big = mixed.index_of((1, 2)), mixed.index_of((2, 3, 4))
    o = (small, big, mixed.index_of((3, 4, 5)))
    swapped = (big, small, o[2])
    assert relative_inverse_pairs(mixed, o, o) - relative_inverse_pairs(mixed, o, swapped) == {(big, small)}
    with pytest.raises(OrderError):
        relative_inverse_pairs(mixed, o, (0, 1))


def test_interval_subcomplex():
    cx = build(PATH4)
    order = listed_order(PATH4)
    assert interval_subcomplex(cx, order, order[0], order[-1]) == cx
    assert interval_subcomplex(cx, order, order[1], order[1]).facets == (cx.facets[order[1]],)
    with pytest.raises(OrderError):
        interval_subcomplex(cx, order, order[2], order[0])


@pytest.mark.parametrize("name", sorted(SS_FIXTURES))
def test_initial_segments_stay_strongly_shelled(name):
    cx = build(SS_FIXTURES[name])
    order = find_strong_shelling_order(cx)
    for p in range(1, len(order) + 1):
        sub = subcomplex(cx, order[:p])
        idx = tuple(sub.index_of(cx.facets[i]) for i in order[:p])
        assert is_strong_shelling_order(sub, idx)


@pytest.mark.parametrize("name", sorted(SS_FIXTURES))
def test_lower_dimensional_facet_has_sandwiched_neighbor(name):
    cx = build(SS_FIXTURES[name])
    fs = cx.facets
    for f1 in fs:
        for f2 in fs:
            if f1.bit_count() < f2.bit_count():
                assert any(
                    (f1 & g).bit_count() + 1 == f1.bit_count()
                    and (f1 & f2) & ~g == 0 and g & ~(f1 | f2) == 0
                    for g in fs
                )


SMALL_SS = ["path4", "mixed", "not_hereditary", "hereditarily_ss", "quasi_harmonious", "cycle_matroid"]


@pytest.mark.parametrize("name", SMALL_SS)
def test_closure_under_links(name):
    cx = build(SS_FIXTURES[name])
    seen = set()
    for f in cx.facets:
        sub = f
        # every subface of every facet
        while True:
            if sub not in seen:
                seen.add(sub)
                lk = link(cx, sub)
                if not lk.is_void:
                    assert is_ss(lk)
            if sub == 0:
                break
            sub = (sub - 1) & f


def test_closure_under_join_expansion_and_skeleta():
    a, b = build(PATH4), build(MIXED)
    assert is_ss(join(a, b))
    assert not is_ss(join(a, build(PATH5)))
    assert is_ss(expansion(build(MIXED), [2, 1, 1, 2, 1, 1]))
    assert not is_ss(expansion(build(PATH5), [1, 2, 1, 1, 1, 1, 1]))
    for name in SMALL_SS:
        cx = build(SS_FIXTURES[name])
        assert is_ss(pure_skeleton(cx, cx.dim))
        if any(f.bit_count() == 2 for f in cx.facets):
            assert is_ss(pure_part(cx, 1))
        if cx.is_pure:
            assert is_ss(complement_complex(cx))


def test_negative_closure_witnesses():
    assert not is_ss(pure_skeleton(build(PATH4), 1))
    assert not is_ss(pure_part(build(MIXED), 2))


@settings(max_examples=200, deadline=None)
@given(small_complexes(max_facets=5))
def test_strong_search_matches_brute_force(cx):
    found = find_strong_shelling_order(cx)
    brute = brute_first(cx, is_sso_literal)
    assert found == brute
    if found is not None:
        assert is_shelling_order(cx, found)


@settings(max_examples=200, deadline=None)
@given(small_complexes(max_facets=5))
def test_plain_search_matches_face_definition(cx):
    found = find_shelling_order(cx)
    assert found == brute_first(cx, is_shelling_definition)


@settings(max_examples=100, deadline=None)
@given(small_complexes(max_facets=5))
def test_verifiers_match_literal_forms(cx):
    fs = sets_of(cx)
    for perm in itertools.islice(itertools.permutations(range(len(fs))), 24):
        ordered = [fs[i] for i in perm]
        assert is_strong_shelling_order(cx, perm) == is_sso_literal(ordered)
        assert is_shelling_order(cx, perm) == is_shelling_definition(ordered)


@settings(max_examples=100, deadline=None)
@given(small_complexes(max_facets=5))
def test_reorder_is_dimension_decreasing_sso(cx):
    order = find_strong_shelling_order(cx)
    if order is not None:
        out = dimension_decreasing_reorder(cx, order)
        assert is_dimension_decreasing(cx, out) and is_strong_shelling_order(cx, out)
