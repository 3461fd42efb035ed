"""M-partitions and full homomorphisms of digraphs.

Parts and template vertices are numbered 1..m in the caller's row order.
Parts may be empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import (
    Digraph,
    FormatError,
    _bits,
    _parse_rows,
    delete_vertex,
    is_independent_set,
    is_strong_clique,
)
from .twins import InvariantViolation, is_homogeneous


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class PatternMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        m = len(rows)
        if any(len(row) != m for row in rows):
            raise ValueError("pattern matrix must be square")
        if any(x not in (0, 1) for row in rows for x in row):
            raise ValueError("pattern matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> "PatternMatrix":
        return cls(tuple(tuple(int(c) for c in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return sum(1 for i in range(self.size) if self.entries[i][i] == 0)

    @property
    def l(self) -> int:  # noqa: E743
        return self.size - self.k

    @property
    def bound(self) -> int:
        return (self.k + 1) * (self.l + 1)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def normalization(self) -> tuple[int, ...]:
        """0-based original indices in normalised order: diagonal zeros first, stable."""
        m = self.size
        return tuple(sorted(range(m), key=lambda i: self.entries[i][i]))

    def normalized(self) -> "PatternMatrix":
        return self.permuted(self.normalization)

    def permuted(self, perm: Sequence[int]) -> "PatternMatrix":
        """Matrix whose row/column ``a`` is row/column ``perm[a]`` of this one."""
        return PatternMatrix(tuple(tuple(self.entries[i][j] for j in perm) for i in perm))

    def rows(self) -> list[str]:
        return ["".join(str(x) for x in row) for row in self.entries]

    def template_arcs(self) -> frozenset[tuple[int, int]]:
        """Arcs of the template H on vertices 1..m; diagonal ones are loops."""
        m = self.size
        return frozenset((i + 1, j + 1) for i in range(m) for j in range(m) if self.entries[i][j])


def parse_matrix(text: str) -> PatternMatrix:
    m, out = _parse_rows(text, loopless=False)
    return PatternMatrix(tuple(tuple(row >> j & 1 for j in range(m)) for row in out))


def format_matrix(M: PatternMatrix) -> str:
    return "".join(f"{line}\n" for line in [str(M.size), *M.rows()])


def all_matrices(m: int) -> list[PatternMatrix]:
    cells = m * m
    return [
        PatternMatrix(tuple(tuple(code >> (i * m + j) & 1 for j in range(m)) for i in range(m)))
        for code in range(1 << cells)
    ]


@dataclass(frozen=True)
class Partition:
    """``assignment[v]`` is the part (1-based) of vertex ``v``."""

    assignment: tuple[int, ...]

    def parts(self, m: int) -> list[frozenset[int]]:
        return [frozenset(v for v, p in enumerate(self.assignment) if p == i + 1) for i in range(m)]

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)


def format_partition(P: Partition) -> str:
    return " ".join(str(p) for p in P.assignment) + "\n"


def parse_partition(text: str) -> Partition:
    try:
        return Partition(tuple(int(tok) for tok in text.split()))
    except ValueError as exc:
        raise FormatError(f"malformed partition line {text!r}") from exc


@dataclass(frozen=True)
class Violation:
    rule: str  # one of diag-0, diag-1, off-0, off-1
    vertices: tuple[int, int]
    parts: tuple[int, int]


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_partition(D: Digraph, M: PatternMatrix, P: Partition) -> PartitionVerdict:
    """Check the four M-partition conditions; report the first failure.

    Scan order: part pairs ``(i, j)`` row-major, then vertex pairs ascending.
    """
    m = M.size
    if len(P) != D.n:
        raise PartitionError(f"partition covers {len(P)} vertices, digraph has {D.n}")
    for v, p in enumerate(P.assignment):
        if not 1 <= p <= m:
            raise PartitionError(f"vertex {v} assigned to part {p}, outside 1..{m}")
    parts = [sorted(S) for S in P.parts(m)]
    for i in range(m):
        for j in range(m):
            want = M[i, j]
            if i == j:
                for a, x in enumerate(parts[i]):
                    for y in parts[i][a + 1:]:
                        # strong clique wants both arcs, independent wants neither
                        if D.has_arc(x, y) != want or D.has_arc(y, x) != want:
                            return PartitionVerdict(False, Violation(f"diag-{want}", (x, y), (i + 1, i + 1)))
            else:
                for x in parts[i]:
                    for y in parts[j]:
                        if D.has_arc(x, y) != want:
                            return PartitionVerdict(False, Violation(f"off-{want}", (x, y), (i + 1, j + 1)))
    return PartitionVerdict(True)


def _compatibility(M: PatternMatrix) -> list[list[int]]:
    # allowed[p][a]: mask of parts q for u, given v in part p and arc type
    # a = [v->u] | [u->v] << 1; the same rule covers q == p
    m = M.size
    allowed = [[0] * 4 for _ in range(m)]
    for p in range(m):
        for a in range(4):
            fwd, back = a & 1, a >> 1
            for q in range(m):
                if M[p, q] == fwd and M[q, p] == back:
                    allowed[p][a] |= 1 << q
    return allowed


def solve_mpartition(D: Digraph, M: PatternMatrix) -> Partition | None:
    """Lexicographically least M-partition, or None.

    Depth-first over vertices 0..n-1 and parts 1..m with forward checking,
    so the first solution reached is the lexicographically least one.
    """
    n, m = D.n, M.size
    if n == 0:
        return Partition(())
    if m == 0:
        return None
    allowed = _compatibility(M)
    out = D.out
    arc_type = [[(out[v] >> u & 1) | (out[u] >> v & 1) << 1 for u in range(n)] for v in range(n)]
    assignment = [0] * n

    def search(v: int, domains: list[int]) -> bool:
        if v == n:
            return True
        row = arc_type[v]
        for p in _bits(domains[v]):
            rule = allowed[p]
            nxt = domains[:]
            for u in range(v + 1, n):
                d = nxt[u] & rule[row[u]]
                if not d:
                    break
                nxt[u] = d
            else:
                assignment[v] = p + 1
                if search(v + 1, nxt):
                    return True
        return False

    if search(0, [(1 << m) - 1] * n):
        return Partition(tuple(assignment))
    return None


def is_m_partitionable(D: Digraph, M: PatternMatrix) -> bool:
    return solve_mpartition(D, M) is not None


def is_full_homomorphism(D: Digraph, M: PatternMatrix, f: Sequence[int]) -> bool:
    H = M.template_arcs()
    return all(
        D.has_arc(x, y) == ((f[x], f[y]) in H)
        for x in range(D.n)
        for y in range(D.n)
        if x != y
    )


def find_full_homomorphism(D: Digraph, M: PatternMatrix) -> tuple[int, ...] | None:
    """Map ``f`` into the template H (vertices 1..m) with ``(x, y)`` an arc of
    D iff ``(f(x), f(y))`` an arc of H, for distinct ``x``, ``y``.

    Plain backtracking over images checked pairwise against H; kept separate
    from the partition solver so the two can be compared.
    """
    n, m = D.n, M.size
    H = M.template_arcs()
    f: list[int] = []

    def extend() -> bool:
        x = len(f)
        if x == n:
            return True
        for image in range(1, m + 1):
            if all(
                D.has_arc(x, y) == ((image, f[y]) in H) and D.has_arc(y, x) == ((f[y], image) in H)
                for y in range(x)
            ):
                f.append(image)
                if extend():
                    return True
                f.pop()
        return False

    return tuple(f) if extend() else None


def is_minimal_obstruction(D: Digraph, M: PatternMatrix) -> bool:
    if is_m_partitionable(D, M):
        return False
    return all(is_m_partitionable(delete_vertex(D, v)[0], M) for v in range(D.n))


def extend_partition_homogeneous(
    D: Digraph, M: PatternMatrix, v: int, P: Partition, S: Iterable[int]
) -> Partition:
    """Put ``v`` back into a partition of ``D - v`` next to its twins in ``S``.

    ``S`` is a homogeneous strong clique (or independent set) of ``D``
    containing ``v``; ``v`` joins the smallest clique (resp. independent)
    part that meets ``S - v``.
    """
    S = frozenset(S)
    if not 0 <= v < D.n:
        raise PartitionError(f"vertex {v} outside 0..{D.n - 1}")
    if v not in S:
        raise PartitionError("v not in S")
    if len(S) < 2:
        raise PartitionError("S must have at least two vertices")
    if not is_homogeneous(D, S):
        raise PartitionError("S not homogeneous in D")
    if is_strong_clique(D, S):
        diagonal = 1
    elif is_independent_set(D, S):
        diagonal = 0
    else:
        raise PartitionError("S is neither a strong clique nor an independent set")
    rest, relabel = delete_vertex(D, v)
    if len(P) != rest.n or not validate_partition(rest, M, P).valid:
        raise PartitionError("P is not a valid M-partition of D - v")
    candidates = sorted(
        P[relabel[u]] for u in S - {v} if M[P[relabel[u]] - 1, P[relabel[u]] - 1] == diagonal
    )
    if not candidates:
        kind = "strong-clique" if diagonal else "independent"
        raise PartitionError(f"S - v meets no {kind} part of P")
    assignment = [0] * D.n
    for old, new in relabel.items():
        assignment[old] = P[new]
    assignment[v] = candidates[0]
    result = Partition(tuple(assignment))
    if not validate_partition(D, M, result).valid:
        raise InvariantViolation("homogeneous extension produced an invalid partition")
    return result
