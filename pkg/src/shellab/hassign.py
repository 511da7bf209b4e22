"""Shellability decisions through h-assignments and facet-removal sequences.

A pure ``d``-dimensional complex is shellable iff its facets can be labelled
``0..d+1`` with label ``i`` used ``h_i`` times so that facets can be removed
one at a time, each removed facet ``F`` containing exactly ``d + 1 - A(F)``
boundary ridges of what is left.  The strong variant additionally requires
every removed facet to be a strong candidate.

Reversing a successful removal sequence gives the (strong) shelling order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Mapping, Sequence

from .complex import ComplexError, NotPureError, SimplicialComplex, distance, h_vector, members
from .search import BudgetExceeded, SearchResult, Status, _Budget
from .shelling import _bits, _require_nonvoid, is_shelling_order, is_strong_shelling_order

__all__ = [
    "HAssignment",
    "candidate_facets",
    "strong_candidate_facets",
    "remove_facet",
    "iter_h_assignments",
    "removal_sequence",
    "search_shellable_via_h",
    "search_strongly_shellable_via_h",
    "decide_shellable_via_h",
    "decide_strongly_shellable_via_h",
    "h_assignment_count",
]


@dataclass(frozen=True)
class HAssignment:
    """Labels for the facets of a pure complex, keyed by facet mask."""

    labels: tuple[tuple[int, int], ...]

    @classmethod
    def for_complex(cls, cx: SimplicialComplex, labels: Sequence[int] | Mapping[int, int]) -> "HAssignment":
        """Validate labels (canonical facet order or mask -> label) against ``h(cx)``."""
        if not cx.is_pure:
            raise NotPureError("h-assignments are defined for pure complexes")
        if isinstance(labels, Mapping):
            if set(labels) != set(cx.facets):
                raise ComplexError("assignment domain differs from the facet set")
            seq = [labels[f] for f in cx.facets]
        else:
            seq = list(labels)
            if len(seq) != len(cx):
                raise ComplexError(f"need {len(cx)} labels, got {len(seq)}")
        top = cx.dim + 1
        for lab in seq:
            if not isinstance(lab, int) or lab < 0 or lab > top:
                raise ComplexError(f"label {lab!r} outside [0, {top}]")
        h = h_vector(cx)
        counts = [seq.count(i) for i in range(top + 1)]
        if tuple(counts) != h:
            raise ComplexError(f"label multiplicities {tuple(counts)} differ from h-vector {h}")
        return cls(tuple(zip(cx.facets, seq)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.labels)

    def label(self, facet: int) -> int:
        return self.as_dict()[facet]

    def restrict(self, facets: Sequence[int]) -> "HAssignment":
        keep = set(facets)
        return HAssignment(tuple((f, a) for f, a in self.labels if f in keep))

    def readable(self) -> list[tuple[tuple[int, ...], int]]:
        return [(members(f), a) for f, a in self.labels]


class _Ridges:
    """Ridge incidence for a pure facet list, queried against an alive mask."""

    def __init__(self, facets: Sequence[int]):
        self.facets = tuple(facets)
        self.top = facets[0].bit_count()
        owners: dict[int, int] = {}
        self.ridges: list[list[int]] = []
        for i, f in enumerate(facets):
            rs = [f & ~(1 << v) for v in _bits(f)]
            self.ridges.append(rs)
            for r in rs:
                owners[r] = owners.get(r, 0) | (1 << i)
        self.owners = owners
        t = len(facets)
        dist = [[distance(a, b) for b in facets] for a in facets]
        self.dist = dist
        # at[g][k]: facets at distance exactly k from g
        self.at = [[0] * (self.top + 1) for _ in range(t)]
        for g in range(t):
            for h in range(t):
                self.at[g][dist[g][h]] |= 1 << h

    def boundary_count(self, i: int, alive: int) -> int:
        own = self.owners
        return sum((own[r] & alive).bit_count() == 1 for r in self.ridges[i])

    def is_strong(self, i: int, alive: int) -> bool:
        near = self.at[i][1] & alive
        for g in _bits(alive & ~(1 << i)):
            k = self.dist[g][i]
            if not near & self.at[g][k - 1]:
                return False
        return True


def _checked(cx: SimplicialComplex, a: HAssignment) -> dict[int, int]:
    if not cx.is_pure:
        raise NotPureError("h-assignments are defined for pure complexes")
    labels = a.as_dict()
    if set(labels) != set(cx.facets):
        raise ComplexError("assignment domain differs from the facet set")
    return labels


def candidate_facets(cx: SimplicialComplex, a: HAssignment) -> set[int]:
    """Facet masks ``F`` holding exactly ``d + 1 - A(F)`` boundary ridges."""
    labels = _checked(cx, a)
    rid = _Ridges(cx.facets)
    alive = (1 << len(cx)) - 1
    return {f for i, f in enumerate(cx.facets) if rid.boundary_count(i, alive) == rid.top - labels[f]}


def strong_candidate_facets(cx: SimplicialComplex, a: HAssignment) -> set[int]:
    cands = candidate_facets(cx, a)
    rid = _Ridges(cx.facets)
    alive = (1 << len(cx)) - 1
    return {f for i, f in enumerate(cx.facets) if f in cands and rid.is_strong(i, alive)}


def remove_facet(cx: SimplicialComplex, a: HAssignment, facet: int) -> tuple[SimplicialComplex, HAssignment]:
    """One removing step; ``facet`` must be a candidate."""
    if facet not in candidate_facets(cx, a):
        raise ComplexError(f"{members(facet)} is not a candidate facet")
    rest = tuple(f for f in cx.facets if f != facet)
    if not rest:
        raise ComplexError("cannot remove the last facet into a complex")
    return SimplicialComplex(cx.n, rest), a.restrict(rest)


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    """Label sequences with the given multiplicities, in lexicographic order."""
    total = sum(counts)
    seq: list[int] = []

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for lab, c in enumerate(counts):
            if c:
                counts[lab] -= 1
                seq.append(lab)
                yield from rec()
                seq.pop()
                counts[lab] += 1

    yield from rec()


def iter_h_assignments(cx: SimplicialComplex) -> Iterator[tuple[int, ...]]:
    """Every h-assignment as a label tuple in canonical facet order, lexicographically."""
    h = h_vector(cx)
    if any(x < 0 for x in h):
        return
    yield from _multiset_permutations(list(h))


def removal_sequence(
    cx: SimplicialComplex, labels: Sequence[int], strong: bool = False
) -> tuple[int, ...] | None:
    """First full removal sequence (canonical indices) under a fixed labelling."""
    rid = _Ridges(cx.facets)
    t = len(cx)
    dead: set[int] = set()
    seq: list[int] = []

    def rec(alive: int) -> bool:
        if not alive:
            return True
        if alive in dead:
            return False
        for i in _bits(alive):
            if rid.boundary_count(i, alive) != rid.top - labels[i]:
                continue
            if strong and not rid.is_strong(i, alive):
                continue
            seq.append(i)
            if rec(alive & ~(1 << i)):
                return True
            seq.pop()
        dead.add(alive)
        return False

    return tuple(seq) if rec((1 << t) - 1) else None


class _ForcedSearch:
    """Removal search where each removal forces its facet's label.

    A removed facet ``F`` must carry label ``d + 1 - b(F)`` with ``b(F)`` its
    current boundary-ridge count, so a state is just the alive mask plus the
    unused label counts.  ``fixed`` pins labels of some facets.
    """

    def __init__(self, cx: SimplicialComplex, h: Sequence[int], strong: bool, budget: _Budget):
        self.rid = _Ridges(cx.facets)
        self.t = len(cx)
        self.h = tuple(h)
        self.strong = strong
        self.budget = budget

    def run(self, fixed: Mapping[int, int], dead: set) -> tuple[int, ...] | None:
        rid, top = self.rid, self.rid.top
        seq: list[int] = []

        def rec(alive: int, counts: tuple[int, ...]) -> bool:
            if not alive:
                return True
            key = (alive, counts)
            if key in dead:
                return False
            for i in _bits(alive):
                self.budget.tick()
                lab = top - rid.boundary_count(i, alive)
                if lab < 0 or not counts[lab] or fixed.get(i, lab) != lab:
                    continue
                if self.strong and not rid.is_strong(i, alive):
                    continue
                seq.append(i)
                nxt = counts[:lab] + (counts[lab] - 1,) + counts[lab + 1:]
                if rec(alive & ~(1 << i), nxt):
                    return True
                seq.pop()
            dead.add(key)
            return False

        pinned = [0] * len(self.h)
        for lab in fixed.values():
            pinned[lab] += 1
        if any(p > c for p, c in zip(pinned, self.h)):
            return None
        return tuple(seq) if rec((1 << self.t) - 1, self.h) else None


def _search(cx: SimplicialComplex, strong: bool, max_nodes: int | None) -> SearchResult:
    if not cx.is_pure:
        raise NotPureError("the h-assignment criterion applies to pure complexes")
    _require_nonvoid(cx)
    start = time.perf_counter()
    h = h_vector(cx)

    def done(status, order=None, extra=None):
        millis = (time.perf_counter() - start) * 1e3
        return SearchResult(status, order, budget.nodes, millis, extra or {"h_vector": h})

    budget = _Budget(max_nodes)
    if any(x < 0 for x in h):
        return done(Status.NO, extra={"h_vector": h, "negative_h": True})
    engine = _ForcedSearch(cx, h, strong, budget)
    try:
        dead: set = set()
        removal = engine.run({}, dead)
        if removal is None:
            return done(Status.NO)
        # pin labels facet by facet to reach the lexicographically first assignment
        fixed: dict[int, int] = {}
        for i in range(len(cx)):
            for lab in range(len(h)):
                trial_dead = set(dead)
                got = engine.run({**fixed, i: lab}, trial_dead)
                if got is not None:
                    fixed[i] = lab
                    dead = trial_dead
                    removal = got
                    break
            else:
                raise AssertionError("feasible assignment prefix has no extension")
    except BudgetExceeded:
        return done(Status.UNDECIDED)
    labels = tuple(fixed[i] for i in range(len(cx)))
    order = tuple(reversed(removal))
    check = is_strong_shelling_order if strong else is_shelling_order
    if not check(cx, order):
        raise AssertionError("reversed removal sequence failed verification")
    return done(Status.YES, order, {
        "h_vector": h,
        "h_assignment": labels,
        "removal": removal,
    })


def search_shellable_via_h(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    return _search(cx, False, max_nodes)


def search_strongly_shellable_via_h(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    return _search(cx, True, max_nodes)


def decide_shellable_via_h(cx: SimplicialComplex, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_shellable_via_h(cx, max_nodes).unwrap()


def decide_strongly_shellable_via_h(cx: SimplicialComplex, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_strongly_shellable_via_h(cx, max_nodes).unwrap()


def h_assignment_count(cx: SimplicialComplex) -> int:
    """``t! / (h_0! ... h_{d+1}!)``."""
    h = h_vector(cx)
    if any(x < 0 for x in h):
        raise ComplexError(f"h-vector {h} has a negative entry")
    out = factorial(len(cx))
    for x in h:
        out //= factorial(x)
    return out
