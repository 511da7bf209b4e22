import itertools
import random

import pytest

from generators import random_pure_poset
from shellab.complex import join
from shellab.posets import (
    Poset, PosetError, bounded_extension, interval, is_strongly_shellable_poset, order_complex,
    ordinal_sum, rank_function, rank_selected,
)


def chain(k):
    return Poset.from_relations(k, [(i, i + 1) for i in range(1, k)])


def antichain(k):
    return Poset.from_relations(k, [])


def two_chains():
    # order complex is two disjoint edges: not shellable
    return Poset.from_relations(4, [(1, 2), (3, 4)])


def grid2():
    # a1, a2 below both b1, b2
    return Poset.from_relations(4, [(1, 3), (1, 4), (2, 3), (2, 4)])


def brute_maximal_chains(p):
    elems = range(1, p.size + 1)
    chains = []
    for r in range(1, p.size + 1):
        for combo in itertools.combinations(elems, r):
            if all(p.less(a, b) or p.less(b, a) for a, b in itertools.combinations(combo, 2)):
                chains.append(frozenset(combo))
    return {c for c in chains if not any(c < d for d in chains)}


def test_order_complex_examples():
    assert order_complex(chain(3)).facet_sets() == [(1, 2, 3)]
    assert sorted(order_complex(antichain(2)).facet_sets()) == [(1,), (2,)]
    with pytest.raises(PosetError):
        order_complex(antichain(0))


def test_closure_and_covers():
    p = Poset.from_relations(3, [(1, 2), (2, 3), (1, 3)])
    assert p.covers() == [(1, 2), (2, 3)]
    assert p.less(1, 3)
    with pytest.raises(PosetError):
        Poset.from_relations(2, [(1, 2), (2, 1)])
    with pytest.raises(PosetError):
        Poset.from_relations(2, [(1, 3)])


def test_labelled_posets():
    p = Poset.from_labelled([("a", "b"), ("b", "c")], elements=["z"])
    assert p.labels == ("z", "a", "b", "c")
    assert p.relation_lines() == ["a < b", "b < c"]


def test_rank_function_examples():
    assert rank_function(chain(3)) == {1: 1, 2: 2, 3: 3}
    assert rank_function(grid2()) == {1: 1, 2: 1, 3: 2, 4: 2}
    impure = Poset.from_relations(3, [(1, 2)])
    with pytest.raises(PosetError):
        rank_function(impure)


def test_rank_selection_and_intervals():
    p = grid2()
    assert rank_selected(p, [1, 2]) == p
    assert rank_selected(p, [2]).size == 2
    with pytest.raises(PosetError):
        rank_selected(p, [3])
    assert interval(p, 1, 1).size == 1
    assert interval(p, 1, 3).size == 2
    with pytest.raises(PosetError):
        interval(p, 3, 1)


def test_ordinal_sum_of_antichains():
    s = ordinal_sum(antichain(2), antichain(2))
    assert sorted(order_complex(s).facet_sets()) == [(1, 3), (1, 4), (2, 3), (2, 4)]


def test_ordinal_sum_is_join_of_order_complexes():
    p, q = grid2(), chain(2)
    assert order_complex(ordinal_sum(p, q)) == join(order_complex(p), order_complex(q))


def test_bounded_extension():
    b = bounded_extension(grid2())
    assert b.size == 6 and b.labels[0] == "bottom" and b.labels[-1] == "top"
    assert b.minimal() == [1]


def test_strongly_shellable_posets():
    assert is_strongly_shellable_poset(chain(4))
    assert is_strongly_shellable_poset(grid2())
    assert not is_strongly_shellable_poset(two_chains())
    assert is_strongly_shellable_poset(two_chains(), max_nodes=1) in (None, False)


def test_bounds_do_not_change_strong_shellability():
    for p in (grid2(), two_chains(), chain(2)):
        assert is_strongly_shellable_poset(p) == is_strongly_shellable_poset(bounded_extension(p))


def test_ordinal_sum_both_directions():
    ss, bad = grid2(), two_chains()
    assert is_strongly_shellable_poset(ordinal_sum(ss, ss))
    assert not is_strongly_shellable_poset(ordinal_sum(ss, bad))
    assert not is_strongly_shellable_poset(ordinal_sum(bad, ss))
    assert not is_strongly_shellable_poset(ordinal_sum(bad, bad))


def test_random_posets_chain_enumeration_and_purity():
    rng = random.Random(3)
    for _ in range(40):
        p = random_pure_poset(rng)
        assert p.is_pure()
        got = {frozenset(s) for s in order_complex(p).facet_sets()}
        assert got == brute_maximal_chains(p)
        ranks = rank_function(p)
        for a, b in p.covers():
            assert ranks[b] == ranks[a] + 1


def test_random_pure_ss_posets_closed_under_selection_and_intervals():
    rng = random.Random(11)
    found = 0
    while found < 10:
        p = random_pure_poset(rng, max_levels=3)
        if not is_strongly_shellable_poset(p):
            continue
        found += 1
        top = max(rank_function(p).values())
        for r in range(1, top + 1):
            for s in itertools.combinations(range(1, top + 1), r):
                assert is_strongly_shellable_poset(rank_selected(p, s))
        for a in range(1, p.size + 1):
            for b in range(1, p.size + 1):
                if p.leq(a, b):
                    assert is_strongly_shellable_poset(interval(p, a, b))
