"""Simplicial complexes over ``[n]`` stored as sorted tuples of facet bit masks.

Vertex ``v`` (1-based) occupies bit ``v - 1`` of a face mask.  Python integers
grow as needed, so there is no hard cap on ``n``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "ComplexError",
    "NotPureError",
    "SimplicialComplex",
    "mask_of",
    "members",
    "from_facets",
    "distance",
    "link",
    "restriction",
    "deletion",
    "join",
    "complement_complex",
    "expansion",
    "skeleton",
    "pure_skeleton",
    "pure_part",
    "f_vector",
    "h_vector",
    "ridge_counts",
    "boundary_ridges",
    "boundary_ridge_count",
]


class ComplexError(ValueError):
    """Invalid complex input or an operation outside its domain."""


class NotPureError(ComplexError):
    """Raised by operations that are only defined for pure complexes."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a face mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _size(mask: int) -> int:
    return mask.bit_count()


def _maximal(masks: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split masks into (maximal, dropped), both ascending and deduplicated."""
    uniq = sorted(set(masks), key=lambda m: (-_size(m), m))
    kept: list[int] = []
    dropped: list[int] = []
    for m in uniq:
        if any(m & k == m for k in kept):
            dropped.append(m)
        else:
            kept.append(m)
    return tuple(sorted(kept)), tuple(sorted(dropped))


@dataclass(frozen=True)
class SimplicialComplex:
    """An inclusion-reduced facet list on the vertex set ``[n]``.

    ``facets`` is ascending by mask value, which is also the reverse
    lexicographic order on sorted vertex lists.  ``dropped`` records the
    non-maximal or duplicate input sets and takes no part in equality.
    """

    n: int
    facets: tuple[int, ...]
    dropped: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def dim(self) -> int:
        return max(_size(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({_size(f) for f in self.facets}) == 1

    @property
    def is_void(self) -> bool:
        """True for the complex ``{∅}`` whose only facet is empty."""
        return self.facets == (0,)

    @property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def vertices(self) -> tuple[int, ...]:
        return members(self.vertex_mask)

    def __len__(self) -> int:
        return len(self.facets)

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [members(f) for f in self.facets]

    def facet_dim(self, index: int) -> int:
        return _size(self.facets[index]) - 1

    def index_of(self, face: Iterable[int] | int) -> int:
        """Canonical index of a facet given as a mask or vertex iterable."""
        m = face if isinstance(face, int) else mask_of(face)
        try:
            return self.facets.index(m)
        except ValueError:
            raise ComplexError(f"{members(m)} is not a facet") from None

    def contains(self, face: Iterable[int] | int) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & f == m for f in self.facets)

    def __str__(self) -> str:
        body = ", ".join("".join(map(str, s)) if self.n < 10 else "{" + ",".join(map(str, s)) + "}"
                         for s in self.facet_sets())
        return f"<{body}>"


def _complex(n: int, masks: Iterable[int]) -> SimplicialComplex:
    kept, dropped = _maximal(masks)
    if not kept:
        kept = (0,)
    return SimplicialComplex(n, kept, dropped)


def from_facets(sets: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    """Build the complex generated by ``sets`` on ``[n]``.

    Non-maximal and repeated sets are dropped; see ``SimplicialComplex.dropped``.
    """
    if n < 0:
        raise ComplexError(f"vertex count must be nonnegative, got {n}")
    masks = []
    for s in sets:
        s = list(s)
        for v in s:
            if not isinstance(v, int) or v < 1 or v > n:
                raise ComplexError(f"vertex {v!r} out of range [1, {n}]")
        masks.append(mask_of(s))
    if not masks:
        raise ComplexError("a complex needs at least one facet")
    # duplicates count as dropped too
    counts = Counter(masks)
    kept, dropped = _maximal(masks)
    extra = tuple(m for m, c in counts.items() if c > 1 and m in kept)
    return SimplicialComplex(n, kept, tuple(sorted(dropped + extra)))


def distance(f: int, g: int) -> int:
    """``min(|F \\ G|, |G \\ F|)`` for face masks."""
    return min(_size(f & ~g), _size(g & ~f))


def link(cx: SimplicialComplex, face: Iterable[int] | int) -> SimplicialComplex:
    a = face if isinstance(face, int) else mask_of(face)
    if not cx.contains(a):
        raise ComplexError(f"{members(a)} is not a face")
    return _complex(cx.n, (f & ~a for f in cx.facets if f & a == a))


def restriction(cx: SimplicialComplex, w: Iterable[int] | int) -> SimplicialComplex:
    wm = w if isinstance(w, int) else mask_of(w)
    if wm == 0:
        raise ComplexError("restriction to the empty vertex set")
    if wm >> cx.n:
        raise ComplexError(f"restriction set {members(wm)} leaves [1, {cx.n}]")
    return _complex(cx.n, (f & wm for f in cx.facets))


def deletion(cx: SimplicialComplex, x: int) -> SimplicialComplex:
    """``Δ \\ x``: restriction to ``[n] \\ {x}``."""
    return restriction(cx, ((1 << cx.n) - 1) & ~(1 << (x - 1)))


def join(gamma: SimplicialComplex, delta: SimplicialComplex) -> SimplicialComplex:
    """Join with ``delta``'s vertices shifted up by ``gamma.n``."""
    shift = gamma.n
    return _complex(gamma.n + delta.n, (f | (g << shift) for f in gamma.facets for g in delta.facets))


def complement_complex(cx: SimplicialComplex) -> SimplicialComplex:
    full = (1 << cx.n) - 1
    return _complex(cx.n, (full & ~f for f in cx.facets))


def expansion(cx: SimplicialComplex, s: Sequence[int]) -> SimplicialComplex:
    """The ``s``-expansion, with ``x_{i,j}`` relabelled ``s_1 + ... + s_{i-1} + j``."""
    if len(s) != cx.n:
        raise ComplexError(f"need {cx.n} multiplicities, got {len(s)}")
    if any(si <= 0 for si in s):
        raise ComplexError("expansion multiplicities must be positive")
    offset = list(itertools.accumulate(s, initial=0))
    out = []
    for f in cx.facets:
        choices = [[offset[i - 1] + j for j in range(1, s[i - 1] + 1)] for i in members(f)]
        for combo in itertools.product(*choices):
            out.append(mask_of(combo))
    return _complex(offset[-1], out)


def _subfaces(mask: int, size: int) -> Iterable[int]:
    for combo in itertools.combinations(members(mask), size):
        yield mask_of(combo)


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """``Δ^(i)``: generated by all faces of dimension at most ``i``."""
    if not 0 <= i <= cx.dim:
        raise ComplexError(f"skeleton dimension {i} outside [0, {cx.dim}]")
    out: list[int] = []
    for f in cx.facets:
        if _size(f) <= i + 1:
            out.append(f)
        else:
            out.extend(_subfaces(f, i + 1))
    return _complex(cx.n, out)


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """``Δ^[i]``: generated by the ``i``-dimensional faces."""
    if not 0 <= i <= cx.dim:
        raise ComplexError(f"skeleton dimension {i} outside [0, {cx.dim}]")
    out: set[int] = set()
    for f in cx.facets:
        if _size(f) >= i + 1:
            out.update(_subfaces(f, i + 1))
    return _complex(cx.n, out)


def pure_part(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """Complex generated by the ``k``-dimensional facets only."""
    chosen = [f for f in cx.facets if _size(f) == k + 1]
    if not chosen:
        raise ComplexError(f"no facet of dimension {k}")
    return SimplicialComplex(cx.n, tuple(chosen))


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_d)`` by breadth-first walk down from the facets."""
    d = cx.dim
    counts = [0] * (d + 2)
    level = set(cx.facets)
    seen: set[int] = set()
    while level:
        seen |= level
        nxt: set[int] = set()
        for face in level:
            m = face
            while m:
                low = m & -m
                sub = face & ~low
                if sub not in seen:
                    nxt.add(sub)
                m ^= low
        level = nxt
    for face in seen:
        counts[_size(face)] += 1
    return tuple(counts)


def h_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    if not cx.is_pure:
        raise NotPureError("h-vector requires a pure complex")
    f = f_vector(cx)
    d = cx.dim
    return tuple(
        sum((-1) ** (j - i) * comb(d + 1 - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 2)
    )


def ridge_counts(facets: Iterable[int]) -> Counter:
    """How many of the given facets contain each codimension-one subface."""
    counts: Counter = Counter()
    for f in facets:
        m = f
        while m:
            low = m & -m
            counts[f & ~low] += 1
            m ^= low
    return counts


def boundary_ridges(cx: SimplicialComplex) -> set[int]:
    if not cx.is_pure:
        raise NotPureError("boundary ridges are defined for pure complexes")
    return {r for r, c in ridge_counts(cx.facets).items() if c == 1}


def boundary_ridge_count(cx: SimplicialComplex, facet: Iterable[int] | int) -> int:
    if not cx.is_pure:
        raise NotPureError("boundary ridges are defined for pure complexes")
    f = facet if isinstance(facet, int) else mask_of(facet)
    if f not in cx.facets:
        raise ComplexError(f"{members(f)} is not a facet")
    counts = ridge_counts(cx.facets)
    total = 0
    m = f
    while m:
        low = m & -m
        total += counts[f & ~low] == 1
        m ^= low
    return total
