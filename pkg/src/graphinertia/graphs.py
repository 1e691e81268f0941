"""Simple undirected graphs with a stable vertex order.

Adjacency is stored as one Python int per vertex, used as a bitset over
the neighbor indices. That keeps graphs immutable and hashable, makes
twin detection a row comparison, and is comfortably dense at the sizes
this toolkit targets (a few hundred vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .linalg import Matrix


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    rows[i] has bit j set iff i and j are adjacent. The relation must be
    symmetric with an empty diagonal; labels, when present, are distinct
    display names, one per vertex. n = 0 is a legal graph.
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count differs from vertex count")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"adjacency row {i} has bits outside 0..n-1")
            if row >> i & 1:
                raise ValueError(f"vertex {i} is adjacent to itself")
        for i in range(self.n):
            for j in range(i):
                if self.rows[i] >> j & 1 != self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({j}, {i})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count differs from vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels are not pairwise distinct")

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        row = self.rows[v]
        return tuple(j for j in range(self.n) if row >> j & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (i, j)
                row >>= 1
                j += 1

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on the given vertices, keeping their order."""
        keep = list(vertices)
        if len(set(keep)) != len(keep):
            raise ValueError("duplicate vertex in induced subgraph")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
            row = 0
            for w in keep:
                if self.rows[v] >> w & 1:
                    row |= 1 << pos[w]
            rows.append(row)
        labels = tuple(self.labels[v] for v in keep) if self.labels else None
        return Graph(len(keep), tuple(rows), labels)

    def same_adjacency(self, other: "Graph") -> bool:
        """Equality on (n, adjacency), ignoring labels."""
        return self.n == other.n and self.rows == other.rows


@dataclass(frozen=True)
class TwinClasses:
    """Partition of the vertices by open neighborhood, plus the isolated ones.

    Two vertices land in the same class iff N(u) = N(v); such vertices
    are never adjacent (a common neighborhood cannot contain either).
    """

    classes: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]


def from_edges(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Graph on n vertices with exactly the given undirected edges.

    Duplicate pairs collapse; (u, v) and (v, u) are the same edge.
    """
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << i) for i in range(k)))


def kneser_graph(ground: int, subset_size: int) -> Graph:
    """Kneser graph: vertices are the subset_size-subsets of {1..ground} in
    lexicographic order, adjacent iff disjoint."""
    if subset_size < 1 or ground < 1:
        raise ValueError("ground set and subset size must be positive")
    if subset_size > ground:
        raise ValueError("subset size exceeds ground set size")
    subsets = [frozenset(s) for s in combinations(range(1, ground + 1), subset_size)]
    n = len(subsets)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if not subsets[i] & subsets[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.induced([u for u in range(g.n) if u != v])


def adjacency_matrix(g: Graph) -> Matrix:
    return Matrix(
        [[g.rows[i] >> j & 1 for j in range(g.n)] for i in range(g.n)]
    )


def twin_classes(g: Graph) -> TwinClasses:
    by_row: dict[int, list[int]] = {}
    for v in range(g.n):
        by_row.setdefault(g.rows[v], []).append(v)
    classes = tuple(
        tuple(group) for group in sorted(by_row.values(), key=lambda c: c[0])
    )
    isolated = tuple(v for v in range(g.n) if g.rows[v] == 0)
    return TwinClasses(classes=classes, isolated=isolated)


def is_reduced(g: Graph) -> bool:
    """True iff g has no twins and no isolated vertices (vacuously for n=0)."""
    seen = set()
    for row in g.rows:
        if row == 0 or row in seen:
            return False
        seen.add(row)
    return True


def reduce(g: Graph) -> Graph:
    """Collapse twin classes to their smallest member and drop isolated
    vertices, repeating until the graph is reduced.

    One pass is not always enough: removing a twin shrinks its neighbors'
    neighborhoods, which can create new twins, so iterate to a fixed point.
    """
    while not is_reduced(g):
        tc = twin_classes(g)
        keep = [cls[0] for cls in tc.classes if g.rows[cls[0]] != 0]
        g = g.induced(sorted(keep))
    return g
