"""Loopless digraphs stored as out- and in-neighbourhood bitrows.

Vertices are ``0..n-1``. Bit ``v`` of ``out[u]`` is set iff ``(u, v)`` is an
arc, and bit ``u`` of ``inn[v]`` mirrors it. Values are immutable and hashable.

Vertex sets are passed as any iterable of ints and returned as frozensets.
"""

from __future__ import annotations

import re
from typing import Iterable


class DigraphError(ValueError):
    """Invalid digraph construction or vertex argument."""


class LoopError(DigraphError):
    def __init__(self, vertex: int):
        super().__init__(f"loop arc ({vertex},{vertex}) at vertex {vertex}")
        self.vertex = vertex


class FormatError(ValueError):
    """Base class for text-format parse failures."""


class MalformedHeaderError(FormatError):
    pass


class InvalidCharacterError(FormatError):
    pass


class NonzeroDiagonalError(FormatError):
    pass


class RaggedRowsError(FormatError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, out: Iterable[int]):
        out = tuple(out)
        if len(out) != n:
            raise DigraphError(f"expected {n} rows, got {len(out)}")
        full = (1 << n) - 1
        inn = [0] * n
        for u, row in enumerate(out):
            if row & ~full:
                raise DigraphError(f"row {u} has an endpoint outside 0..{n - 1}")
            if row >> u & 1:
                raise LoopError(u)
            for v in _bits(row):
                inn[v] |= 1 << u
        self.n = n
        self.out = out
        self.inn = tuple(inn)
        self._hash = hash((n, out))

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in _bits(self.out[u]))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def num_arcs(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.out[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.inn[v]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        arcs = ", ".join(f"{u}->{v}" for u, v in sorted(self.arcs)) or "-"
        return f"D({self.n}; {arcs})"


def make_digraph(n: int, arcs: Iterable[tuple[int, int]] = ()) -> Digraph:
    """Build a digraph on ``n`` vertices; repeated arcs collapse."""
    if n < 0:
        raise DigraphError("vertex count must be non-negative")
    out = [0] * n
    for u, v in arcs:
        if u == v:
            raise LoopError(u)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u},{v}) has an endpoint outside 0..{n - 1}")
        out[u] |= 1 << v
    return Digraph(n, out)


def _check_vertex(D: Digraph, v: int) -> None:
    if not 0 <= v < D.n:
        raise DigraphError(f"vertex {v} outside 0..{D.n - 1}")


def to_mask(D: Digraph, S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        _check_vertex(D, v)
        mask |= 1 << v
    return mask


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> Digraph:
    """Subdigraph induced by ``S``, relabelled keeping the original order."""
    keep = sorted(set(S))
    mask = to_mask(D, keep)
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        row = 0
        for w in _bits(D.out[v] & mask):
            row |= 1 << pos[w]
        out.append(row)
    return Digraph(len(keep), out)


def delete_vertex(D: Digraph, v: int) -> tuple[Digraph, dict[int, int]]:
    """Return ``D - v`` and the map from surviving old labels to new labels."""
    _check_vertex(D, v)
    relabel = {u: (u if u < v else u - 1) for u in range(D.n) if u != v}
    return induced_subdigraph(D, relabel), relabel


def complement(D: Digraph) -> Digraph:
    full = (1 << D.n) - 1
    return Digraph(D.n, [(full ^ row) & ~(1 << u) for u, row in enumerate(D.out)])


def is_independent_set(D: Digraph, S: Iterable[int]) -> bool:
    mask = to_mask(D, S)
    return all(D.out[v] & mask == 0 for v in _bits(mask))


def is_strong_clique(D: Digraph, S: Iterable[int]) -> bool:
    mask = to_mask(D, S)
    return all((D.out[v] | 1 << v) & mask == mask for v in _bits(mask))


def _disjoint_masks(D: Digraph, S: Iterable[int], T: Iterable[int]) -> tuple[int, int]:
    s, t = to_mask(D, S), to_mask(D, T)
    if s & t:
        raise DigraphError("vertex sets must be disjoint")
    return s, t


def is_completely_adjacent(D: Digraph, S: Iterable[int], T: Iterable[int]) -> bool:
    """Every arc from ``S`` to ``T`` is present."""
    s, t = _disjoint_masks(D, S, T)
    return all(D.out[x] & t == t for x in _bits(s))


def is_completely_nonadjacent(D: Digraph, S: Iterable[int], T: Iterable[int]) -> bool:
    """No arc from ``S`` to ``T`` is present."""
    s, t = _disjoint_masks(D, S, T)
    return all(D.out[x] & t == 0 for x in _bits(s))


# -- text codec -------------------------------------------------------------

_HEADER = re.compile(r"[0-9]+")


def _parse_rows(text: str, loopless: bool) -> tuple[int, list[int]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not _HEADER.fullmatch(lines[0]):
        head = lines[0] if lines else ""
        raise MalformedHeaderError(f"malformed header {head!r}: expected a decimal vertex count")
    n = int(lines[0])
    rows = lines[1:]
    if len(rows) != n:
        raise RaggedRowsError(f"ragged rows: expected {n} rows, got {len(rows)}")
    out = []
    for i, line in enumerate(rows):
        bad = set(line) - {"0", "1"}
        if bad:
            raise InvalidCharacterError(f"row {i}: non-{{0,1}} character {sorted(bad)[0]!r}")
        if len(line) != n:
            raise RaggedRowsError(f"ragged rows: row {i} has length {len(line)}, expected {n}")
        if loopless and line[i] != "0":
            raise NonzeroDiagonalError(f"nonzero diagonal at row {i}")
        out.append(sum(1 << j for j, c in enumerate(line) if c == "1"))
    return n, out


def parse_digraph(text: str) -> Digraph:
    n, out = _parse_rows(text, loopless=True)
    return Digraph(n, out)


def digraph_rows(D: Digraph) -> list[str]:
    return ["".join("1" if row >> j & 1 else "0" for j in range(D.n)) for row in D.out]


def format_digraph(D: Digraph) -> str:
    return "".join(f"{line}\n" for line in [str(D.n), *digraph_rows(D)])
