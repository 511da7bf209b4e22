"""Finite posets given by cover relations, their order complexes, and the
constructions that preserve strong shellability."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .complex import SimplicialComplex, _complex
from .search import SearchResult, Status
from .shelling import _bits, search_strong_shelling

__all__ = [
    "PosetError",
    "Poset",
    "order_complex",
    "rank_function",
    "rank_selected",
    "interval",
    "ordinal_sum",
    "bounded_extension",
    "search_strongly_shellable_poset",
    "is_strongly_shellable_poset",
]


class PosetError(ValueError):
    """Cyclic relations, impure posets where purity is needed, or bad arguments."""


@dataclass(frozen=True)
class Poset:
    """Elements ``1..m``; ``above[x-1]`` is the bit mask of elements strictly above ``x``.

    Element ``x`` is bit ``x - 1``, matching face masks of the order complex.
    ``labels`` are display names, one per element.
    """

    above: tuple[int, ...]
    labels: tuple = field(compare=False)

    @classmethod
    def from_relations(cls, size: int, relations: Iterable[tuple[int, int]], labels=None) -> "Poset":
        """Order generated by ``a < b`` relations on ``1..size`` (any generating set, not only covers)."""
        up = [0] * size
        for a, b in relations:
            if not (1 <= a <= size and 1 <= b <= size):
                raise PosetError(f"relation {a} < {b} outside 1..{size}")
            if a == b:
                raise PosetError(f"reflexive relation {a} < {a}")
            up[a - 1] |= 1 << (b - 1)
        # transitive closure, repeated until stable
        changed = True
        while changed:
            changed = False
            for x in range(size):
                acc = up[x]
                for y in _bits(up[x]):
                    acc |= up[y]
                if acc != up[x]:
                    up[x] = acc
                    changed = True
        for x in range(size):
            if up[x] >> x & 1:
                raise PosetError(f"relations contain a cycle through element {x + 1}")
        labels = tuple(labels) if labels is not None else tuple(range(1, size + 1))
        if len(labels) != size:
            raise PosetError(f"need {size} labels, got {len(labels)}")
        return cls(tuple(up), labels)

    @classmethod
    def from_labelled(cls, relations: Iterable[tuple[Hashable, Hashable]],
                      elements: Sequence[Hashable] = ()) -> "Poset":
        """Poset on arbitrary labels, numbered by first appearance."""
        index: dict = {}
        for e in elements:
            index.setdefault(e, len(index) + 1)
        pairs = []
        for a, b in relations:
            ia = index.setdefault(a, len(index) + 1)
            ib = index.setdefault(b, len(index) + 1)
            pairs.append((ia, ib))
        return cls.from_relations(len(index), pairs, list(index))

    @property
    def size(self) -> int:
        return len(self.above)

    def less(self, x: int, y: int) -> bool:
        return bool(self.above[x - 1] >> (y - 1) & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y)

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction as ``(x, y)`` with ``y`` covering ``x``."""
        out = []
        for x in range(self.size):
            up = self.above[x]
            for y in _bits(up):
                if not any(up >> z & 1 and self.above[z] >> y & 1 for z in _bits(up)):
                    out.append((x + 1, y + 1))
        return out

    def upper_covers(self, x: int) -> list[int]:
        return [b for a, b in self.covers() if a == x]

    def minimal(self) -> list[int]:
        below = 0
        for up in self.above:
            below |= up
        return [x + 1 for x in range(self.size) if not below >> x & 1]

    def maximal_chains(self) -> list[int]:
        """Bit masks of the maximal chains."""
        cov: dict[int, list[int]] = {x: [] for x in range(1, self.size + 1)}
        for a, b in self.covers():
            cov[a].append(b)
        out: list[int] = []
        stack = [(x, 1 << (x - 1)) for x in self.minimal()]
        while stack:
            x, chain = stack.pop()
            if not cov[x]:
                out.append(chain)
            for y in cov[x]:
                stack.append((y, chain | 1 << (y - 1)))
        return sorted(out)

    def is_pure(self) -> bool:
        return len({c.bit_count() for c in self.maximal_chains()}) == 1

    def induced(self, keep: Sequence[int]) -> "Poset":
        """Subposet on ``keep`` (ascending), renumbered ``1..len(keep)``."""
        keep = sorted(keep)
        pos = {x: i + 1 for i, x in enumerate(keep)}
        rels = [(pos[x], pos[y]) for x in keep for y in keep if self.less(x, y)]
        return Poset.from_relations(len(keep), rels, [self.labels[x - 1] for x in keep])

    def relation_lines(self) -> list[str]:
        return [f"{self.labels[a - 1]} < {self.labels[b - 1]}" for a, b in self.covers()]


def order_complex(p: Poset) -> SimplicialComplex:
    if p.size == 0:
        raise PosetError("the empty poset has no order complex")
    return _complex(p.size, p.maximal_chains())


def rank_function(p: Poset) -> dict[int, int]:
    """Rank of ``x``: number of elements on any maximal chain from a minimal element up to ``x``."""
    if p.size == 0 or not p.is_pure():
        raise PosetError("rank function needs a nonempty pure poset")
    rank: dict[int, int] = {}
    for chain in p.maximal_chains():
        for r, x in enumerate(_chain_elements(p, chain), start=1):
            if rank.setdefault(x, r) != r:
                raise PosetError(f"element {x} sits at two different heights")
    return rank


def _chain_elements(p: Poset, chain: int) -> list[int]:
    elems = [x + 1 for x in _bits(chain)]
    # within a chain, fewer elements above means higher
    return sorted(elems, key=lambda x: -(p.above[x - 1] & chain).bit_count())


def rank_selected(p: Poset, ranks: Iterable[int]) -> Poset:
    rank = rank_function(p)
    top = max(rank.values())
    ranks = set(ranks)
    if not ranks or not ranks <= set(range(1, top + 1)):
        raise PosetError(f"rank set {sorted(ranks)} is not a nonempty subset of 1..{top}")
    return p.induced([x for x in range(1, p.size + 1) if rank[x] in ranks])


def interval(p: Poset, x: int, y: int) -> Poset:
    """Closed interval ``[x, y]``."""
    if not p.leq(x, y):
        raise PosetError(f"{p.labels[x - 1]} is not below {p.labels[y - 1]}")
    return p.induced([z for z in range(1, p.size + 1) if p.leq(x, z) and p.leq(z, y)])


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """``P`` below ``Q``; ``Q``'s elements are renumbered after ``P``'s."""
    m = p.size
    rels = [(x, y) for x in range(1, m + 1) for y in range(1, m + 1) if p.less(x, y)]
    rels += [(m + x, m + y) for x in range(1, q.size + 1) for y in range(1, q.size + 1) if q.less(x, y)]
    rels += [(x, m + y) for x in range(1, m + 1) for y in range(1, q.size + 1)]
    return Poset.from_relations(m + q.size, rels, list(p.labels) + list(q.labels))


def bounded_extension(p: Poset) -> Poset:
    """``P`` with a new bottom (element 1) and top (last element)."""
    bottom = Poset.from_relations(1, [], ["bottom"])
    top = Poset.from_relations(1, [], ["top"])
    return ordinal_sum(ordinal_sum(bottom, p), top)


def search_strongly_shellable_poset(p: Poset, max_nodes: int | None = None) -> SearchResult:
    return search_strong_shelling(order_complex(p), max_nodes)


def is_strongly_shellable_poset(p: Poset, max_nodes: int | None = None) -> bool | None:
    """True, False, or None when the search budget runs out."""
    res = search_strongly_shellable_poset(p, max_nodes)
    if res.status is Status.UNDECIDED:
        return None
    return res.found
