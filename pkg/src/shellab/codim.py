"""The codimension-one graph of a complex and the distance-based characterizations
built on it."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import NotPureError, SimplicialComplex, distance, members
from .search import SearchResult, Status, prefix_search
from .shelling import WitnessRule, _bits, _require_nonvoid, is_strong_shelling_order

__all__ = [
    "CodimGraph",
    "GraphMetrics",
    "build_gamma",
    "complex_distances",
    "is_harmonious",
    "graph_distance_bounded",
    "search_quasi_harmonious",
    "is_quasi_harmonious",
    "removal_preserves_distances",
    "search_distance_preserving",
    "find_distance_preserving_order",
    "graph_metrics",
    "search_pure_ss_via_gamma",
    "decide_pure_ss_via_gamma",
    "to_dot",
]

INF = math.inf


@dataclass(frozen=True)
class CodimGraph:
    """Simple graph on ``0..size-1`` with adjacency bit masks and BFS distances.

    ``labels`` name the vertices (facet vertex tuples for a complex's graph).
    """

    adj: tuple[int, ...]
    labels: tuple
    dist: tuple[tuple[float, ...], ...]

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], labels: Sequence | None = None) -> "CodimGraph":
        adj = tuple(adj)
        size = len(adj)
        for v, m in enumerate(adj):
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(m):
                if u >= size or not adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at {v}-{u}")
        labels = tuple(labels) if labels is not None else tuple(range(size))
        full = (1 << size) - 1
        dist = tuple(tuple(_bfs(adj, s, full)) for s in range(size))
        return cls(adj, labels, dist)

    @classmethod
    def from_edges(cls, size: int, edges: Iterable[tuple[int, int]], labels=None) -> "CodimGraph":
        adj = [0] * size
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls.from_adjacency(adj, labels)

    @property
    def size(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.size) for v in _bits(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))


def _bfs(adj: Sequence[int], source: int, alive: int) -> list[float]:
    out = [INF] * len(adj)
    out[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        for v in _bits(nxt):
            out[v] = d
        frontier = nxt
    return out


def build_gamma(cx: SimplicialComplex) -> CodimGraph:
    f = cx.facets
    adj = [0] * len(f)
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            if distance(f[i], f[j]) == 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CodimGraph.from_adjacency(adj, [members(m) for m in f])


def complex_distances(cx: SimplicialComplex) -> list[list[int]]:
    f = cx.facets
    return [[distance(a, b) for b in f] for a in f]


def is_harmonious(cx: SimplicialComplex) -> bool:
    """Graph distance in the codimension-one graph equals facet distance for all pairs."""
    g = build_gamma(cx)
    dd = complex_distances(cx)
    return all(g.dist[i][j] == dd[i][j] for i in range(len(cx)) for j in range(len(cx)))


def graph_distance_bounded(cx: SimplicialComplex) -> bool:
    """Graph distance never exceeds facet distance; in particular the graph is connected.

    Every strongly shellable complex satisfies this, so failing it is a cheap
    certificate of non strong shellability.
    """
    g = build_gamma(cx)
    dd = complex_distances(cx)
    return all(g.dist[i][j] <= dd[i][j] for i in range(len(cx)) for j in range(len(cx)))


def search_quasi_harmonious(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    """Dimension-decreasing strong shelling order whose witnesses are dimension-bounded.

    For each pair ``F_i`` before ``F_j`` the witness ``F_k`` must also satisfy
    ``dim F_i >= dim F_k >= dim F_j``.
    """
    _require_nonvoid(cx)

    def pair_ok(fi: int, fg: int, fk: int) -> bool:
        lo = fi & fg
        return (lo & fk == lo and fk & ~(fi | fg) == 0
                and fi.bit_count() >= fk.bit_count() >= fg.bit_count())

    rule = WitnessRule(cx.facets, pair_ok)
    sizes = [f.bit_count() for f in cx.facets]
    full = (1 << len(cx)) - 1

    def candidates(placed: int):
        rest = list(_bits(full & ~placed))
        top = max(sizes[g] for g in rest)
        return [g for g in rest if sizes[g] == top]

    res = prefix_search(len(cx), rule.can_append, candidates=candidates,
                        feasible=rule.feasible, max_nodes=max_nodes)
    if res.found:
        assert is_strong_shelling_order(cx, res.order)
    return res


def is_quasi_harmonious(cx: SimplicialComplex, max_nodes: int | None = None) -> bool:
    return search_quasi_harmonious(cx, max_nodes).unwrap() is not None


def removal_preserves_distances(adj: Sequence[int], alive: int, v: int) -> bool:
    """Whether deleting ``v`` from the induced subgraph on ``alive`` keeps every
    surviving distance.

    A shortest path through ``v`` enters and leaves via two neighbors of ``v``;
    it can be rerouted iff those neighbors are adjacent or share another common
    neighbor.  So only nonadjacent neighbor pairs of ``v`` need checking.
    """
    nb = list(_bits(adj[v] & alive))
    rest = alive & ~(1 << v)
    for a, u in enumerate(nb):
        au = adj[u]
        for w in nb[a + 1:]:
            if au >> w & 1:
                continue
            if not au & adj[w] & rest:
                return False
    return True


def search_distance_preserving(graph: CodimGraph, max_nodes: int | None = None) -> SearchResult:
    """First vertex-deletion order (ascending tie-break) that never alters a surviving distance.

    A finite distance that grows or becomes infinite is a violation; pairs that
    were already disconnected stay so harmlessly.
    """
    adj = graph.adj
    full = (1 << graph.size) - 1

    def can_remove(removed: int, v: int) -> bool:
        return removal_preserves_distances(adj, full & ~removed, v)

    return prefix_search(graph.size, can_remove, max_nodes=max_nodes)


def find_distance_preserving_order(graph: CodimGraph, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_distance_preserving(graph, max_nodes).unwrap()


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    girth: int
    diameter: float

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "girth": self.girth,
            "diameter": "inf" if self.diameter == INF else int(self.diameter),
        }


def _girth(adj: Sequence[int]) -> int:
    best = INF
    size = len(adj)
    for root in range(size):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * depth[u] + 1 >= best:
                break
            for w in _bits(adj[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, depth[u] + depth[w] + 1)
    return 0 if best == INF else int(best)


def graph_metrics(graph: CodimGraph) -> GraphMetrics:
    """Connectivity, girth (0 for a forest) and diameter (``inf`` if disconnected)."""
    finite = [d for row in graph.dist for d in row if d != INF]
    connected = len(finite) == graph.size ** 2
    diameter = max(finite, default=0) if connected else INF
    return GraphMetrics(connected, _girth(graph.adj), diameter)


def search_pure_ss_via_gamma(cx: SimplicialComplex, max_nodes: int | None = None) -> SearchResult:
    """Harmonious check plus a distance-preserving order of the codimension-one graph.

    On success the order is the reversed deletion order, which is a strong
    shelling order.
    """
    if not cx.is_pure:
        raise NotPureError("the codimension-one graph criterion applies to pure complexes")
    _require_nonvoid(cx)
    if not is_harmonious(cx):
        return SearchResult(Status.NO, extra={"harmonious": False})
    res = search_distance_preserving(build_gamma(cx), max_nodes)
    res.extra["harmonious"] = True
    if res.found:
        res.extra["deletion_order"] = res.order
        res.order = tuple(reversed(res.order))
        if not is_strong_shelling_order(cx, res.order):
            raise AssertionError("reversed distance-preserving order failed verification")
    return res


def decide_pure_ss_via_gamma(cx: SimplicialComplex, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_pure_ss_via_gamma(cx, max_nodes).unwrap()


def to_dot(graph: CodimGraph, name: str = "gamma") -> str:
    """Graphviz text with each vertex labelled by its facet."""
    lines = [f"graph {name} {{"]
    for v, label in enumerate(graph.labels):
        text = " ".join(map(str, label)) if isinstance(label, tuple) else str(label)
        lines.append(f'  {v} [label="{text}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
