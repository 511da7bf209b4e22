"""Membership tests for classes of complexes around strong shellability, and the
implications among them."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import (
    ComplexError, NotPureError, SimplicialComplex, deletion, from_facets, link, members,
    restriction,
)
from .codim import graph_distance_bounded
from .search import BudgetExceeded, SearchResult, Status, _Budget
from .shelling import _bits, _require_nonvoid, search_shelling, search_strong_shelling

__all__ = [
    "is_matroid",
    "is_shifted",
    "find_shifting_relabeling",
    "weakly_matroid_scan",
    "is_weakly_matroid",
    "is_vertex_decomposable",
    "search_hereditary",
    "is_hereditary",
    "spanning_forest_complex",
    "reverse_lex_order",
    "lex_order",
    "ClassReport",
    "ImplicationError",
    "IMPLICATIONS",
    "classify",
]

FLAGS = (
    "matroid",
    "shifted",
    "weakly_matroid",
    "vertex_decomposable",
    "hereditary_shellable",
    "hereditarily_strongly_shellable",
    "strongly_shellable",
    "shellable",
)

# (premise, conclusion, needs_pure)
IMPLICATIONS = (
    ("shifted", "weakly_matroid", False),
    ("shifted", "hereditary_shellable", False),
    ("shifted", "strongly_shellable", True),
    ("matroid", "weakly_matroid", False),
    ("matroid", "hereditarily_strongly_shellable", False),
    ("weakly_matroid", "vertex_decomposable", True),
    ("vertex_decomposable", "shellable", True),
    ("hereditary_shellable", "shellable", False),
    ("hereditarily_strongly_shellable", "hereditary_shellable", False),
    ("hereditarily_strongly_shellable", "strongly_shellable", False),
    ("strongly_shellable", "shellable", False),
)


def is_matroid(cx: SimplicialComplex) -> bool:
    """Pure and every facet pair satisfies the exchange property."""
    if not cx.is_pure:
        return False
    fs = cx.facets
    for f in fs:
        for g in fs:
            if f == g:
                continue
            for i in _bits(f & ~g):
                base = f & ~(1 << i)
                if not any(cx.contains(base | 1 << j) for j in _bits(g & ~f)):
                    return False
    return True


def _shifted_facets(facets: Sequence[int], n: int, contains) -> bool:
    for f in facets:
        for i in _bits(f):
            for j in range(i + 1, n):
                if not f >> j & 1 and not contains(f & ~(1 << i) | 1 << j):
                    return False
    return True


def is_shifted(cx: SimplicialComplex) -> bool:
    """Shiftedness in the given labelling.

    Checking facets suffices: a face ``A`` inside facet ``F`` shifts to a face
    inside ``F`` or inside the shift of ``F``.
    """
    return _shifted_facets(cx.facets, cx.n, cx.contains)


def find_shifting_relabeling(cx: SimplicialComplex, max_perms: int | None = None) -> tuple[int, ...] | None:
    """A vertex relabelling ``v -> perm[v-1]`` under which the complex is shifted.

    Tries all ``n!`` permutations in lexicographic order; raises BudgetExceeded
    after ``max_perms`` of them.
    """
    budget = _Budget(max_perms)
    for perm in itertools.permutations(range(1, cx.n + 1)):
        budget.tick()
        relabeled = from_facets([[perm[v - 1] for v in s] for s in cx.facet_sets()], cx.n)
        if is_shifted(relabeled):
            return perm
    return None


def weakly_matroid_scan(cx: SimplicialComplex) -> tuple[bool, int]:
    """``(is_weakly_matroid, vacuous_pairs)``.

    For an ordered facet pair ``(G, F)`` the pivot ``q`` is the least vertex
    where they disagree, provided ``q`` lies in ``G``; when it lies in ``F``
    instead the pair imposes nothing and is counted as vacuous.
    """
    fs = cx.facets
    vacuous = 0
    ok = True
    for g in fs:
        for f in fs:
            if f == g:
                continue
            diff = f ^ g
            low = diff & -diff
            if not g & low:
                vacuous += 1
                continue
            q = low.bit_length() - 1
            base = g & ~low
            if ok and not any(
                not g >> p & 1 and cx.contains(base | 1 << p) for p in range(q + 1, cx.n)
            ):
                ok = False
    return ok, vacuous


def is_weakly_matroid(cx: SimplicialComplex) -> bool:
    return weakly_matroid_scan(cx)[0]


def is_vertex_decomposable(cx: SimplicialComplex, max_nodes: int | None = None) -> bool:
    """Recursive shedding-vertex decision for pure complexes, memoized on facet sets."""
    if not cx.is_pure:
        raise NotPureError("vertex decomposability is decided for pure complexes only")
    memo: dict[tuple[int, ...], bool] = {}
    budget = _Budget(max_nodes)

    def vd(c: SimplicialComplex) -> bool:
        if len(c.facets) == 1:
            return True
        key = c.facets
        if key in memo:
            return memo[key]
        budget.tick()
        d = c.dim
        out = False
        for x in c.vertices:
            rest = deletion(c, x)
            if not rest.is_pure or rest.dim != d:
                continue
            lk = link(c, 1 << (x - 1))
            if lk.dim != d - 1 or not lk.is_pure:
                continue
            if vd(rest) and vd(lk):
                out = True
                break
        memo[key] = out
        return out

    return vd(cx)


def _distinct_restrictions(cx: SimplicialComplex):
    verts = cx.vertex_mask
    seen: set[tuple[int, ...]] = set()
    sub = verts
    # every nonempty subset of the vertex set, largest masks first
    while sub:
        r = restriction(cx, sub)
        if r.facets not in seen:
            seen.add(r.facets)
            yield sub, r
        sub = (sub - 1) & verts


def search_hereditary(cx: SimplicialComplex, prop: str, max_nodes: int | None = None) -> SearchResult:
    """Whether every restriction to a nonempty vertex subset has ``prop``.

    ``prop`` is ``"shellable"`` or ``"strongly_shellable"``.  A NO result puts
    a failing vertex set in ``extra["witness"]``.  For strong shellability a
    restriction whose graph distances exceed facet distances is rejected
    without searching.  ``max_nodes`` bounds the
    total search effort across all restrictions.
    """
    searches = {"shellable": search_shelling, "strongly_shellable": search_strong_shelling}
    if prop not in searches:
        raise ValueError(f"unknown property {prop!r}")
    _require_nonvoid(cx)
    run = searches[prop]
    screen = prop == "strongly_shellable"
    start = time.perf_counter()
    used = 0
    checked = 0
    for w, r in _distinct_restrictions(cx):
        left = None if max_nodes is None else max_nodes - used
        if left is not None and left <= 0:
            return SearchResult(Status.UNDECIDED, nodes=used, millis=(time.perf_counter() - start) * 1e3)
        if screen and not graph_distance_bounded(r):
            res = SearchResult(Status.NO, extra={"screened": True})
        else:
            res = run(r, left)
        used += res.nodes
        checked += 1
        if res.status is Status.UNDECIDED:
            return SearchResult(Status.UNDECIDED, nodes=used, millis=(time.perf_counter() - start) * 1e3)
        if res.status is Status.NO:
            return SearchResult(Status.NO, nodes=used, millis=(time.perf_counter() - start) * 1e3,
                                extra={"witness": members(w), "restrictions_checked": checked})
    return SearchResult(Status.YES, nodes=used, millis=(time.perf_counter() - start) * 1e3,
                        extra={"restrictions_checked": checked})


def is_hereditary(cx: SimplicialComplex, prop: str, max_nodes: int | None = None) -> bool:
    res = search_hereditary(cx, prop, max_nodes)
    if res.status is Status.UNDECIDED:
        raise BudgetExceeded(res.nodes)
    return res.found


def spanning_forest_complex(edges: Sequence[tuple[int, int]]) -> SimplicialComplex:
    """Complex on edge labels ``1..|E|`` whose facets are the spanning forests.

    Edge ``k`` (1-based) is ``edges[k-1]``; graph vertices are arbitrary hashables.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        raise ComplexError("graph needs at least one edge")
    seen = set()
    for u, v in edges:
        if u == v:
            raise ComplexError(f"loop at {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise ComplexError(f"repeated edge {u!r}-{v!r}")
        seen.add(key)
    nodes = sorted({x for e in edges for x in e}, key=repr)
    index = {x: i for i, x in enumerate(nodes)}

    def components(chosen: Iterable[int]) -> int:
        parent = list(range(len(nodes)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = len(nodes)
        for k in chosen:
            a, b = find(index[edges[k][0]]), find(index[edges[k][1]])
            if a == b:
                return -1
            parent[a] = b
            count -= 1
        return count

    full_components = _graph_components(len(nodes), [(index[u], index[v]) for u, v in edges])
    rank = len(nodes) - full_components
    facets = [
        [k + 1 for k in combo]
        for combo in itertools.combinations(range(len(edges)), rank)
        if components(combo) == full_components
    ]
    cx = from_facets(facets, len(edges))
    if not is_matroid(cx):
        raise AssertionError("spanning forest complex failed the exchange property")
    return cx


def _graph_components(size: int, pairs: Sequence[tuple[int, int]]) -> int:
    adj: list[set[int]] = [set() for _ in range(size)]
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    count = 0
    for s in range(size):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u] - seen:
                seen.add(w)
                stack.append(w)
    return count


def reverse_lex_order(cx: SimplicialComplex) -> tuple[int, ...]:
    """Facets compared by their largest differing vertex; smaller comes first."""
    if not cx.is_pure:
        raise NotPureError("reverse lexicographic order is used for pure complexes")
    sets = cx.facet_sets()
    return tuple(sorted(range(len(sets)), key=lambda i: sets[i][::-1]))


def lex_order(cx: SimplicialComplex) -> tuple[int, ...]:
    sets = cx.facet_sets()
    return tuple(sorted(range(len(sets)), key=lambda i: sets[i]))


class ImplicationError(AssertionError):
    """Decided class flags contradict a known implication; indicates a bug."""


@dataclass
class ClassReport:
    flags: dict[str, bool | None]
    pure: bool
    notes: list[str] = field(default_factory=list)
    nodes: int = 0

    def as_dict(self) -> dict:
        return {"pure": self.pure, "flags": dict(self.flags), "notes": list(self.notes)}

    def violations(self) -> list[tuple[str, str]]:
        out = []
        for a, b, needs_pure in IMPLICATIONS:
            if needs_pure and not self.pure:
                continue
            if self.flags.get(a) is True and self.flags.get(b) is False:
                out.append((a, b))
        return out


def classify(cx: SimplicialComplex, max_nodes: int | None = None) -> ClassReport:
    """Run every membership test; searches that exhaust ``max_nodes`` report None.

    ``max_nodes`` applies to each search separately.
    """
    _require_nonvoid(cx)
    flags: dict[str, bool | None] = {}
    notes: list[str] = []
    nodes = 0
    flags["matroid"] = is_matroid(cx)
    flags["shifted"] = is_shifted(cx)
    wm, vacuous = weakly_matroid_scan(cx)
    flags["weakly_matroid"] = wm
    if vacuous:
        notes.append(f"weakly_matroid: {vacuous} ordered facet pairs have their first difference "
                     "outside G and were treated as unconstrained")
    if cx.is_pure:
        try:
            flags["vertex_decomposable"] = is_vertex_decomposable(cx, max_nodes)
        except BudgetExceeded as exc:
            flags["vertex_decomposable"] = None
            nodes += exc.nodes
    else:
        flags["vertex_decomposable"] = None
        notes.append("vertex_decomposable: not decided for nonpure complexes")
    for name, prop in (("hereditary_shellable", "shellable"),
                       ("hereditarily_strongly_shellable", "strongly_shellable")):
        res = search_hereditary(cx, prop, max_nodes)
        nodes += res.nodes
        flags[name] = None if res.status is Status.UNDECIDED else res.found
        if res.status is Status.NO:
            notes.append(f"{name}: restriction to {list(res.extra['witness'])} fails")
    for name, run in (("strongly_shellable", search_strong_shelling), ("shellable", search_shelling)):
        res = run(cx, max_nodes)
        nodes += res.nodes
        flags[name] = None if res.status is Status.UNDECIDED else res.found
    report = ClassReport({k: flags[k] for k in FLAGS}, cx.is_pure, notes, nodes)
    bad = report.violations()
    if bad:
        raise ImplicationError(f"implications violated: {bad} for {cx}")
    return report
