"""Distinguishing vertices, twin classification and homogeneous sets."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .digraph import (
    Digraph,
    DigraphError,
    _bits,
    _check_vertex,
    delete_vertex,
    is_independent_set,
    is_strong_clique,
    to_mask,
)


class TwinVerdict(enum.Enum):
    NOT_TWINS = "NotTwins"
    FALSE_TWINS = "FalseTwins"
    TRUE_TWINS = "TrueTwins"
    # twins joined by exactly one of the two arcs
    MIXED_TWINS = "MixedTwins"


@dataclass(frozen=True)
class TwinClassification:
    verdict: TwinVerdict
    witness: int | None = None

    @property
    def are_twins(self) -> bool:
        return self.verdict is not TwinVerdict.NOT_TWINS


class NotPointDeterminingError(DigraphError):
    pass


class InvariantViolation(RuntimeError):
    """A guaranteed object was not found; indicates a bug."""


class HomogeneousKind(enum.Enum):
    STRONG_CLIQUE = "strong-clique"
    INDEPENDENT = "independent"


def _split(D: Digraph, w: int, pair: int) -> bool:
    # pair is a two-bit mask; w splits it iff exactly one bit is hit
    a = (D.inn[w] & pair).bit_count()
    b = (D.out[w] & pair).bit_count()
    return a == 1 or b == 1


def distinguishes(D: Digraph, w: int, u: int, v: int) -> bool:
    """True iff exactly one of ``u``, ``v`` is an in-neighbour of ``w``, or
    exactly one is an out-neighbour of ``w``."""
    for x in (w, u, v):
        _check_vertex(D, x)
    if len({w, u, v}) != 3:
        raise DigraphError("w, u, v must be pairwise distinct")
    return _split(D, w, 1 << u | 1 << v)


def _witness(D: Digraph, u: int, v: int) -> int | None:
    pair = 1 << u | 1 << v
    for w in range(D.n):
        if w != u and w != v and _split(D, w, pair):
            return w
    return None


def twin_type(D: Digraph, u: int, v: int) -> TwinClassification:
    _check_vertex(D, u)
    _check_vertex(D, v)
    if u == v:
        raise DigraphError("twin_type needs two distinct vertices")
    w = _witness(D, u, v)
    if w is not None:
        return TwinClassification(TwinVerdict.NOT_TWINS, w)
    arcs = D.has_arc(u, v) + D.has_arc(v, u)
    verdict = (TwinVerdict.FALSE_TWINS, TwinVerdict.MIXED_TWINS, TwinVerdict.TRUE_TWINS)[arcs]
    return TwinClassification(verdict)


def twin_pairs(D: Digraph) -> list[tuple[int, int, TwinClassification]]:
    return [(u, v, twin_type(D, u, v)) for u, v in combinations(range(D.n), 2)]


def _has_false_twins(D: Digraph) -> bool:
    for u, v in combinations(range(D.n), 2):
        if not (D.out[u] >> v & 1 or D.out[v] >> u & 1) and _witness(D, u, v) is None:
            return True
    return False


def is_point_determining(D: Digraph) -> bool:
    """No pair of false twins."""
    return not _has_false_twins(D)


def require_point_determining(D: Digraph) -> None:
    if _has_false_twins(D):
        raise NotPointDeterminingError(f"{D!r} is not point-determining")


def removable_vertex(D: Digraph) -> int:
    """Smallest ``v`` such that ``D - v`` stays point-determining."""
    require_point_determining(D)
    if D.n == 0:
        raise DigraphError("the empty digraph has no vertex to remove")
    for v in range(D.n):
        if is_point_determining(delete_vertex(D, v)[0]):
            return v
    raise InvariantViolation(f"no removable vertex found in point-determining {D!r}")


def _homogeneous_mask(D: Digraph, mask: int) -> bool:
    outside = ((1 << D.n) - 1) & ~mask
    for w in _bits(outside):
        o = D.out[w] & mask
        i = D.inn[w] & mask
        if o not in (0, mask) or i not in (0, mask):
            return False
    return True


def is_homogeneous(D: Digraph, S: Iterable[int]) -> bool:
    """Every vertex outside ``S`` sees all of ``S`` or none of it, separately
    for in-arcs and out-arcs."""
    return _homogeneous_mask(D, to_mask(D, S))


def max_homogeneous(D: Digraph, kind: HomogeneousKind | str) -> tuple[int, frozenset[int]]:
    """Largest homogeneous strong clique or independent set.

    Exhaustive over subsets from the largest size down; the witness is the
    lexicographically first maximum set.
    """
    kind = HomogeneousKind(kind)
    test = is_strong_clique if kind is HomogeneousKind.STRONG_CLIQUE else is_independent_set
    for size in range(D.n, 0, -1):
        for S in combinations(range(D.n), size):
            if test(D, S) and _homogeneous_mask(D, to_mask(D, S)):
                return size, frozenset(S)
    return 0, frozenset()
