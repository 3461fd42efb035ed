"""Canonical labelling of small digraphs.

Individualisation-refinement: the vertex set is refined to an equitable
ordered partition by (out-count, in-count) into each cell, the first
non-singleton cell is individualised vertex by vertex, and the leaf with the
smallest adjacency certificate wins. Automorphisms found as leaves with equal
certificates prune children lying in an already-explored orbit.
"""

from __future__ import annotations

from .digraph import Digraph, _bits, format_digraph


def _refine(out: tuple[int, ...], inn: tuple[int, ...], cells: list[int]) -> list[int]:
    s = 0
    while s < len(cells):
        splitter = cells[s]
        refined: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                refined.append(cell)
                continue
            groups: dict[tuple[int, int], int] = {}
            for v in _bits(cell):
                key = ((out[v] & splitter).bit_count(), (inn[v] & splitter).bit_count())
                groups[key] = groups.get(key, 0) | 1 << v
            if len(groups) == 1:
                refined.append(cell)
            else:
                refined.extend(groups[key] for key in sorted(groups))
        if len(refined) != len(cells):
            cells = refined
            s = 0
        else:
            s += 1
    return cells


def _certificate(out: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        row = 0
        for w in _bits(out[v]):
            row |= 1 << pos[w]
        cert.append(row)
    return tuple(cert)


class _Search:
    def __init__(self, D: Digraph):
        self.out = D.out
        self.inn = D.inn
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.leaves: dict[tuple[int, ...], list[int]] = {}
        self.automorphisms: list[list[int]] = []

    def _leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        cert = _certificate(self.out, order)
        seen = self.leaves.get(cert)
        if seen is not None:
            gamma = [0] * len(order)
            for a, b in zip(seen, order):
                gamma[a] = b
            self.automorphisms.append(gamma)
            return
        self.leaves[cert] = order
        if self.best is None or cert < self.best:
            self.best = cert
            self.best_order = order

    def _orbit_rep(self, v: int, fixed: list[int]) -> int:
        # smallest vertex reachable from v under found automorphisms fixing `fixed`
        gens = [g for g in self.automorphisms if all(g[f] == f for f in fixed)]
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return min(orbit)

    def run(self, cells: list[int], fixed: list[int]) -> None:
        cells = _refine(self.out, self.inn, cells)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            self._leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in _bits(cell):
            if explored and any(self._orbit_rep(v, fixed) == self._orbit_rep(u, fixed)
                                for u in explored):
                continue
            explored.append(v)
            child = cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1:]
            self.run(child, fixed + [v])


def canonical_labeling(D: Digraph) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position i."""
    if D.n == 0:
        return []
    search = _Search(D)
    search.run([(1 << D.n) - 1], [])
    return search.best_order


def relabel(D: Digraph, order: list[int]) -> Digraph:
    """Digraph whose vertex ``i`` is ``order[i]`` of ``D``."""
    return Digraph(D.n, _certificate(D.out, order))


def canonical_digraph(D: Digraph) -> Digraph:
    return relabel(D, canonical_labeling(D))


def canonical_form(D: Digraph) -> bytes:
    return format_digraph(canonical_digraph(D)).encode("ascii")


def are_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    if D1.n != D2.n or D1.num_arcs() != D2.num_arcs():
        return False
    return canonical_form(D1) == canonical_form(D2)
