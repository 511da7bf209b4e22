"""Text formats: facet-list files for complexes and cover-list files for posets."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import ComplexError, SimplicialComplex, from_facets, mask_of, members
from .posets import Poset

__all__ = [
    "FormatError",
    "ParsedComplex",
    "parse_complex",
    "format_complex",
    "parse_poset",
    "format_poset",
]


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ParsedComplex:
    """The complex plus the canonical index of each kept facet in file order."""

    complex: SimplicialComplex
    listed: tuple[int, ...]

    def drop_report(self) -> list[str]:
        return [f"dropped non-maximal or repeated set: {' '.join(map(str, members(m)))}"
                for m in self.complex.dropped]


def parse_complex(text: str) -> ParsedComplex:
    n = None
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise FormatError(lineno, f"expected header 'n <count>', got {line!r}")
            n = int(tokens[1])
            continue
        try:
            verts = [int(t) for t in tokens]
        except ValueError:
            raise FormatError(lineno, f"facet must be integers, got {line!r}") from None
        if verts != sorted(set(verts)):
            raise FormatError(lineno, "facet vertices must be strictly ascending")
        if verts[0] < 1 or verts[-1] > n:
            raise FormatError(lineno, f"vertex outside 1..{n}")
        rows.append((lineno, verts))
    if n is None:
        raise FormatError(1, "missing header 'n <count>'")
    if not rows:
        raise FormatError(1, "no facets")
    try:
        cx = from_facets([v for _, v in rows], n)
    except ComplexError as exc:
        raise FormatError(rows[0][0], str(exc)) from None
    listed: list[int] = []
    for _, verts in rows:
        m = mask_of(verts)
        if m in cx.facets and cx.index_of(m) not in listed:
            listed.append(cx.index_of(m))
    return ParsedComplex(cx, tuple(listed))


def format_complex(cx: SimplicialComplex) -> str:
    """Canonical text: header then facets in canonical order."""
    lines = [f"n {cx.n}"]
    lines += [" ".join(map(str, s)) for s in cx.facet_sets()]
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """One ``a < b`` cover per line; a line with a single label adds an isolated element."""
    relations = []
    elements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "<" in line:
            parts = [p.strip() for p in line.split("<")]
            if len(parts) != 2 or not all(parts) or any(" " in p for p in parts):
                raise FormatError(lineno, f"expected 'a < b', got {line!r}")
            relations.append((parts[0], parts[1]))
        elif len(line.split()) == 1:
            elements.append(line)
        else:
            raise FormatError(lineno, f"expected 'a < b' or a single element, got {line!r}")
    if not relations and not elements:
        raise FormatError(1, "empty poset")
    return Poset.from_labelled(relations, elements)


def format_poset(p: Poset) -> str:
    lines = p.relation_lines()
    covered = {x for pair in p.covers() for x in pair}
    lines += [str(p.labels[x - 1]) for x in range(1, p.size + 1) if x not in covered]
    return "\n".join(lines) + "\n"
