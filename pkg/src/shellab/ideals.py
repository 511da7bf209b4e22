"""Monomials, monomial ideals and linear quotients of facet ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import SimplicialComplex, members
from .search import SearchResult, prefix_search
from .shelling import OrderError, check_permutation

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "facet_ideal",
    "colon_monomial",
    "has_linear_quotients",
    "search_linear_quotient_order",
    "find_linear_quotient_order",
]


@dataclass(frozen=True)
class Monomial:
    """``x_1^e_1 ... x_n^e_n`` stored as an exponent tuple; trailing zeros are trimmed."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        exps = tuple(self.exponents)
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_vars(cls, variables: Iterable[int]) -> "Monomial":
        """Product of the given 1-based variables, with repetition."""
        exps: list[int] = []
        for v in variables:
            if v < 1:
                raise ValueError(f"variable index {v} must be positive")
            if len(exps) < v:
                exps.extend([0] * (v - len(exps)))
            exps[v - 1] += 1
        return cls(tuple(exps))

    @classmethod
    def from_mask(cls, mask: int) -> "Monomial":
        return cls.from_vars(members(mask))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def mask(self) -> int:
        if not self.is_squarefree:
            raise ValueError(f"{self} is not squarefree")
        return sum(1 << i for i, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        b = other.exponents
        return all(e <= (b[i] if i < len(b) else 0) for i, e in enumerate(self.exponents))

    def single_variable(self) -> int | None:
        """1-based index if this monomial is a single variable."""
        if self.degree != 1:
            return None
        return next(i for i, e in enumerate(self.exponents) if e) + 1

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


def colon_monomial(u: Monomial, v: Monomial) -> Monomial:
    """``u : v``, exponentwise ``max(u_i - v_i, 0)``."""
    a, b = u.exponents, v.exponents
    return Monomial(tuple(max(e - (b[i] if i < len(b) else 0), 0) for i, e in enumerate(a)))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ordered minimal generators; no generator divides another."""

    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = self.generators
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and g.divides(h):
                    raise ValueError(f"generator {g} divides {h}")

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial]) -> "MonomialIdeal":
        """Drop duplicates and non-minimal generators, keeping first-seen order."""
        uniq: list[Monomial] = []
        for g in gens:
            if g not in uniq:
                uniq.append(g)
        keep = [g for g in uniq if not any(h != g and h.divides(g) for h in uniq)]
        return cls(tuple(keep))

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"


def facet_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Generators ``x^F`` in canonical facet order."""
    return MonomialIdeal(tuple(Monomial.from_mask(f) for f in cx.facets))


class _ColonTable:
    def __init__(self, gens: Sequence[Monomial]):
        self.gens = tuple(gens)
        t = len(gens)
        self.colon = [[colon_monomial(gens[j], gens[i]) for i in range(t)] for j in range(t)]
        # var[k][i]: the variable u_k : u_i, if it is one
        self.var = [[self.colon[k][i].single_variable() for i in range(t)] for k in range(t)]

    def pair_ok(self, j: int, i: int, earlier: Iterable[int]) -> bool:
        target = self.colon[j][i].exponents
        for k in earlier:
            v = self.var[k][i]
            if v is not None and v <= len(target) and target[v - 1]:
                return True
        return False


def has_linear_quotients(ideal: MonomialIdeal, order: Sequence[int]) -> bool:
    """Each colon ``<u_1..u_{i-1}> : u_i`` is generated by variables.

    For monomials this holds iff every ``u_j : u_i`` with ``j < i`` is divisible
    by a variable of the form ``u_k : u_i`` with ``k < i``.
    """
    order = check_permutation(order, len(ideal))
    table = _ColonTable(ideal.generators)
    for p, i in enumerate(order):
        earlier = order[:p]
        if not all(table.pair_ok(j, i, earlier) for j in earlier):
            return False
    return True


def search_linear_quotient_order(ideal: MonomialIdeal, max_nodes: int | None = None) -> SearchResult:
    if not len(ideal):
        raise OrderError("the zero ideal has no generator order")
    table = _ColonTable(ideal.generators)

    def can_append(placed: int, i: int) -> bool:
        earlier = [k for k in range(len(ideal)) if placed >> k & 1]
        return all(table.pair_ok(j, i, earlier) for j in earlier)

    res = prefix_search(len(ideal), can_append, max_nodes=max_nodes)
    if res.found:
        assert has_linear_quotients(ideal, res.order)
    return res


def find_linear_quotient_order(ideal: MonomialIdeal, max_nodes: int | None = None) -> tuple[int, ...] | None:
    return search_linear_quotient_order(ideal, max_nodes).unwrap()
