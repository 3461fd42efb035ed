"""Isomorph-free generation of digraphs and minimal M-obstructions.

Children of a canonical parent on ``n - 1`` vertices add vertex ``n - 1``
with every in/out adjacency pattern. A child is kept iff deleting the vertex
in its last canonical position gives back the parent (up to isomorphism);
duplicates inside one parent's subtree are dropped by canonical form. Each
isomorphism class therefore comes from exactly one parent, so the subtrees
are independent tasks and their union needs no cross-task deduplication.

Obstruction search prunes the tree to M-partitionable digraphs. A minimal
obstruction has every proper induced subdigraph partitionable, and a
partitionable digraph has the same property by heredity, so both always have
a partitionable canonical parent in the pruned frontier.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .canon import canonical_labeling, relabel
from .digraph import Digraph, delete_vertex, digraph_rows, format_digraph, parse_digraph
from .mpartition import PatternMatrix, is_m_partitionable, is_minimal_obstruction
from .triples import red_free_vertices, triple_intersection_violations
from .twins import HomogeneousKind, is_point_determining, max_homogeneous, removable_vertex

log = logging.getLogger(__name__)

GENERATOR_VERSION = "fullhom-augment-1"

# largest order searched past the bound without allow_long
DEFAULT_ORDER_CAP = 6


class CeilingError(ValueError):
    pass


def _canon(D: Digraph) -> tuple[Digraph, int]:
    """Canonical relabelling of D and the vertex placed last."""
    order = canonical_labeling(D)
    return relabel(D, order), (order[-1] if order else -1)


def _children(parent: Digraph) -> Iterator[Digraph]:
    p = parent.n
    bit = 1 << p
    for back in range(1 << p):
        base = [row | bit if back >> i & 1 else row for i, row in enumerate(parent.out)]
        for fwd in range(1 << p):
            yield Digraph(p + 1, (*base, fwd))


def _expand(parent: Digraph, keep: Callable[[Digraph], bool] | None = None) -> list[Digraph]:
    seen: set[Digraph] = set()
    accepted = []
    for child in _children(parent):
        if keep is not None and not keep(child):
            continue
        canon, last = _canon(child)
        if canon in seen:
            continue
        seen.add(canon)
        if _canon(delete_vertex(child, last)[0])[0] == parent:
            accepted.append(canon)
    return accepted


def _sort_key(D: Digraph) -> bytes:
    return format_digraph(D).encode("ascii")


def _pool_map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


_LEVELS: dict[int, tuple[Digraph, ...]] = {0: (Digraph(0, ()),)}


def _expand_all(parent: Digraph) -> list[Digraph]:
    return _expand(parent)


def digraph_level(n: int, jobs: int = 1) -> tuple[Digraph, ...]:
    """canonical representatives of all digraphs on ``n`` vertices, sorted."""
    if n < 0:
        raise ValueError("order must be non-negative")
    top = max(k for k in _LEVELS if k <= n)
    for order in range(top + 1, n + 1):
        found = _pool_map(_expand_all, list(_LEVELS[order - 1]), jobs)
        _LEVELS[order] = tuple(sorted((D for batch in found for D in batch), key=_sort_key))
        log.info("order %d: %d digraphs", order, len(_LEVELS[order]))
    return _LEVELS[n]


def enumerate_digraphs(n: int, jobs: int = 1) -> Iterator[Digraph]:
    return iter(digraph_level(n, jobs))


# -- obstruction catalogs -----------------------------------------------------


@dataclass
class ObstructionCatalog:
    matrix: PatternMatrix
    ceiling: int
    obstructions: dict[int, list[Digraph]] = field(default_factory=dict)

    @property
    def bound(self) -> int:
        return self.matrix.bound

    @property
    def counts_by_order(self) -> dict[int, int]:
        return {order: len(ds) for order, ds in sorted(self.obstructions.items()) if ds}

    @property
    def extremal_count(self) -> int:
        return self.counts_by_order.get(self.bound, 0)

    @property
    def max_order(self) -> int | None:
        return max(self.counts_by_order, default=None)

    def all(self) -> list[Digraph]:
        return [D for order in sorted(self.obstructions) for D in self.obstructions[order]]

    def forms(self) -> set[bytes]:
        return {_sort_key(D) for D in self.all()}

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.rows(),
            "k": self.matrix.k,
            "l": self.matrix.l,
            "bound": self.bound,
            "ceiling": self.ceiling,
            "obstructions": [{"order": D.n, "rows": digraph_rows(D)} for D in self.all()],
            "counts_by_order": {str(k): v for k, v in self.counts_by_order.items()},
            "extremal_count": self.extremal_count,
            "generator_version": GENERATOR_VERSION,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "ObstructionCatalog":
        M = PatternMatrix.from_rows(data["matrix"])
        by_order: dict[int, list[Digraph]] = {}
        for entry in data["obstructions"]:
            D = parse_digraph("".join(f"{line}\n" for line in [str(entry["order"]), *entry["rows"]]))
            by_order.setdefault(D.n, []).append(D)
        catalog = cls(M, int(data["ceiling"]), by_order)
        expected = {int(k): v for k, v in data["counts_by_order"].items()}
        if catalog.counts_by_order != expected or catalog.extremal_count != data["extremal_count"]:
            raise ValueError("catalog counts disagree with its obstruction list")
        return catalog

    @classmethod
    def from_json(cls, text: str) -> "ObstructionCatalog":
        return cls.from_dict(json.loads(text))


class _ObstructionTask:
    """Picklable per-parent task for the pruned search."""

    def __init__(self, M: PatternMatrix):
        self.M = M

    def _keep(self, child: Digraph) -> bool:
        # partitionable children, or children whose every deletion is partitionable
        if is_m_partitionable(child, self.M):
            return True
        return is_minimal_obstruction(child, self.M)

    def __call__(self, parent: Digraph) -> tuple[list[Digraph], list[Digraph]]:
        fits, blocked = [], []
        for D in _expand(parent, self._keep):
            (fits if is_m_partitionable(D, self.M) else blocked).append(D)
        return fits, blocked


def enumerate_minimal_obstructions(M: PatternMatrix, ceiling: int, jobs: int = 1) -> ObstructionCatalog:
    """All minimal M-obstructions of order at most ``ceiling``, one per class."""
    if ceiling < 1:
        raise CeilingError("ceiling must be at least 1")
    task = _ObstructionTask(M)
    frontier: list[Digraph] = [Digraph(0, ())]
    catalog = ObstructionCatalog(M, ceiling)
    for order in range(1, ceiling + 1):
        results = _pool_map(task, frontier, jobs)
        frontier = sorted((D for fits, _ in results for D in fits), key=_sort_key)
        found = sorted((D for _, blocked in results for D in blocked), key=_sort_key)
        if found:
            catalog.obstructions[order] = found
        log.info("order %d: frontier %d, obstructions %d", order, len(frontier), len(found))
        if not frontier:
            break
    return catalog


def obstructions_by_filtering(M: PatternMatrix, ceiling: int) -> ObstructionCatalog:
    """Unpruned reference: filter every digraph class up to ``ceiling``."""
    catalog = ObstructionCatalog(M, ceiling)
    for order in range(1, ceiling + 1):
        found = [D for D in digraph_level(order) if is_minimal_obstruction(D, M)]
        if found:
            catalog.obstructions[order] = found
    return catalog


# -- verification -------------------------------------------------------------


@dataclass
class VerificationReport:
    property: str
    orders: list[int]
    instances: int
    violations: list[Digraph]
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = True) -> dict:
        data = {
            "property": self.property,
            "orders": self.orders,
            "instances": self.instances,
            "holds": self.holds,
            "violations": [digraph_rows(D) for D in self.violations],
            "details": self.details,
        }
        if timing:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        violations = [
            parse_digraph("".join(f"{line}\n" for line in [str(len(rows)), *rows]))
            for rows in data["violations"]
        ]
        return cls(data["property"], list(data["orders"]), int(data["instances"]),
                   violations, float(data.get("wall_time", 0.0)), dict(data.get("details", {})))


def _point_determining_up_to(max_n: int, jobs: int) -> Iterator[Digraph]:
    for n in range(1, max_n + 1):
        for D in digraph_level(n, jobs):
            if is_point_determining(D):
                yield D


def verify_point_determining_theorem(max_n: int, jobs: int = 1) -> VerificationReport:
    """Every point-determining digraph keeps the property after deleting some
    vertex, and after deleting any vertex that is red in no triple."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    start = time.perf_counter()
    count, bad = 0, []
    for D in _point_determining_up_to(max_n, jobs):
        count += 1
        free = red_free_vertices(D)
        ok = bool(free) and all(is_point_determining(delete_vertex(D, v)[0]) for v in free)
        try:
            removable_vertex(D)
        except RuntimeError:
            ok = False
        if not ok:
            bad.append(D)
    return VerificationReport("point-determining-deletion", list(range(1, max_n + 1)), count, bad,
                              time.perf_counter() - start)


def verify_triple_lemma(max_n: int, jobs: int = 1) -> VerificationReport:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    start = time.perf_counter()
    count, bad = 0, []
    for D in _point_determining_up_to(max_n, jobs):
        count += 1
        if triple_intersection_violations(D):
            bad.append(D)
    return VerificationReport("triple-intersection", list(range(1, max_n + 1)), count, bad,
                              time.perf_counter() - start)


def default_ceiling(M: PatternMatrix, allow_long: bool = False) -> int:
    ceiling = M.bound + 1
    return ceiling if allow_long else min(ceiling, DEFAULT_ORDER_CAP)


def verify_bound(M: PatternMatrix, ceiling: int | None = None, jobs: int = 1,
                 allow_long: bool = False) -> VerificationReport:
    """Search obstructions up to ``ceiling``; any above the bound is a violation."""
    if ceiling is None:
        ceiling = default_ceiling(M, allow_long)
    if ceiling < M.bound:
        raise CeilingError(f"ceiling {ceiling} is below the bound {M.bound}")
    if ceiling > DEFAULT_ORDER_CAP and not allow_long:
        raise CeilingError(f"ceiling {ceiling} exceeds {DEFAULT_ORDER_CAP}; pass allow_long")
    start = time.perf_counter()
    catalog = enumerate_minimal_obstructions(M, ceiling, jobs)
    bad = [D for D in catalog.all() if D.n > M.bound]
    details = {
        "matrix": M.rows(),
        "bound": M.bound,
        "ceiling": ceiling,
        "max_obstruction_order": catalog.max_order,
        "counts_by_order": {str(k): v for k, v in catalog.counts_by_order.items()},
    }
    return VerificationReport("obstruction-order-bound", list(range(1, ceiling + 1)),
                              len(catalog.all()), bad, time.perf_counter() - start, details)


def extremal_census(M: PatternMatrix, jobs: int = 1) -> int:
    """Number of minimal obstructions with exactly (k+1)(l+1) vertices."""
    return enumerate_minimal_obstructions(M, M.bound, jobs).extremal_count


def verify_homogeneous_bounds(M: PatternMatrix, catalog: ObstructionCatalog | Iterable[Digraph]) -> VerificationReport:
    """Homogeneous strong cliques have at most k+1 vertices and homogeneous
    independent sets at most l+1, in every listed obstruction."""
    start = time.perf_counter()
    digraphs = catalog.all() if isinstance(catalog, ObstructionCatalog) else list(catalog)
    bad = []
    for D in digraphs:
        clique, _ = max_homogeneous(D, HomogeneousKind.STRONG_CLIQUE)
        indep, _ = max_homogeneous(D, HomogeneousKind.INDEPENDENT)
        if clique > M.k + 1 or indep > M.l + 1:
            bad.append(D)
    orders = sorted({D.n for D in digraphs})
    return VerificationReport("homogeneous-set-bounds", orders, len(digraphs), bad,
                              time.perf_counter() - start, {"matrix": M.rows()})
