"""Deterministic backtracking over orderings whose step validity depends only
on the set already placed.

Every order search in this package has that shape: whether item ``g`` may be
appended after a prefix depends on the *set* of items in the prefix, never on
their arrangement.  Hence a prefix set that cannot be completed is dead under
any arrangement, and the search memoizes dead sets.  Memoization never changes
which order is found: candidates are tried in ascending index, so the result
is the lexicographically first valid sequence either way.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

__all__ = [
    "Status",
    "SearchResult",
    "BudgetExceeded",
    "default_max_nodes",
    "prefix_search",
]

ENV_MAX_NODES = "SHELLAB_MAX_NODES"


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SearchResult:
    status: Status
    order: tuple[int, ...] | None = None
    nodes: int = 0
    millis: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status is Status.YES

    def unwrap(self) -> tuple[int, ...] | None:
        """Order or None; raise if the search was cut off."""
        if self.status is Status.UNDECIDED:
            raise BudgetExceeded(self.nodes)
        return self.order


def default_max_nodes() -> int | None:
    raw = os.environ.get(ENV_MAX_NODES)
    if not raw:
        return None
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{ENV_MAX_NODES} must be positive, got {raw}")
    return value


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.nodes)


def prefix_search(
    size: int,
    can_append: Callable[[int, int], bool],
    *,
    candidates: Callable[[int], Iterable[int]] | None = None,
    feasible: Callable[[int], bool] | None = None,
    max_nodes: int | None = None,
) -> SearchResult:
    """Find the first order of ``range(size)`` in which every step is valid.

    ``can_append(placed_mask, g)`` decides whether ``g`` may follow a prefix
    whose item set is ``placed_mask``.  ``candidates(placed_mask)`` optionally
    narrows (never reorders beyond ascending) the items tried next.
    ``feasible(placed_mask)`` is an optional necessary condition for a prefix
    set to be completable; returning False must only ever reject dead sets.
    """
    start = time.perf_counter()
    full = (1 << size) - 1
    budget = _Budget(max_nodes)
    dead: set[int] = set()
    order: list[int] = []

    def next_items(placed: int) -> Iterable[int]:
        if candidates is not None:
            return candidates(placed)
        rest = full & ~placed
        return (g for g in range(size) if rest >> g & 1)

    # explicit stack: depth can reach the facet count
    stack = [iter(next_items(0))]
    placed = 0
    try:
        if size == 0:
            return SearchResult(Status.YES, (), 0, 0.0)
        while stack:
            advanced = False
            for g in stack[-1]:
                budget.tick()
                nxt = placed | (1 << g)
                if nxt in dead or not can_append(placed, g):
                    continue
                if feasible is not None and nxt != full and not feasible(nxt):
                    dead.add(nxt)
                    continue
                order.append(g)
                placed = nxt
                if placed == full:
                    millis = (time.perf_counter() - start) * 1e3
                    return SearchResult(Status.YES, tuple(order), budget.nodes, millis)
                stack.append(iter(next_items(placed)))
                advanced = True
                break
            if not advanced:
                stack.pop()
                dead.add(placed)
                if order:
                    placed &= ~(1 << order.pop())
    except BudgetExceeded:
        millis = (time.perf_counter() - start) * 1e3
        return SearchResult(Status.UNDECIDED, None, budget.nodes, millis)
    millis = (time.perf_counter() - start) * 1e3
    return SearchResult(Status.NO, None, budget.nodes, millis)
