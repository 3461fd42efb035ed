"""Triples of a point-determining digraph.

A triple ``(x, {y, z})`` has red vertex ``x`` and green pair ``{y, z}`` that
become false twins once ``x`` is deleted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, delete_vertex
from .twins import TwinVerdict, require_point_determining, twin_type


@dataclass(frozen=True, order=True)
class Triple:
    red: int
    green: tuple[int, int]

    def __post_init__(self):
        y, z = self.green
        if y > z:
            object.__setattr__(self, "green", (z, y))
        if len({self.red, y, z}) != 3:
            raise ValueError("triple vertices must be pairwise distinct")

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.red, *self.green))

    def to_dict(self) -> dict:
        return {"red": self.red, "green": list(self.green)}

    @classmethod
    def from_dict(cls, data: dict) -> "Triple":
        return cls(int(data["red"]), tuple(int(g) for g in data["green"]))


def enumerate_triples(D: Digraph) -> list[Triple]:
    require_point_determining(D)
    found = []
    for x in range(D.n):
        rest, relabel = delete_vertex(D, x)
        for y, z in combinations([v for v in range(D.n) if v != x], 2):
            if twin_type(rest, relabel[y], relabel[z]).verdict is TwinVerdict.FALSE_TWINS:
                found.append(Triple(x, (y, z)))
    return found


def red_free_vertices(D: Digraph) -> frozenset[int]:
    """Vertices that are red in no triple; never empty for point-determining D."""
    reds = {t.red for t in enumerate_triples(D)}
    return frozenset(v for v in range(D.n) if v not in reds)


def triple_intersection_violations(D: Digraph) -> list[tuple[Triple, Triple]]:
    """Pairs ``(T1, T2)`` where some vertex is green in T1 and red in T2 but
    no other vertex is green in T2 and red in T1.

    T1's red vertex is the only possible "other" vertex, so the test reduces
    to: red(T2) in green(T1) and red(T1) not in green(T2).
    """
    triples = enumerate_triples(D)
    return [
        (t1, t2)
        for t1 in triples
        for t2 in triples
        if t2.red in t1.green and t1.red not in t2.green
    ]
