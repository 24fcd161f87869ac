"""Immutable simple graphs, vertex sets, and the structural predicates used throughout.

Vertices are dense integer ids ``0..n-1``.  Adjacency is stored twice: as sorted
neighbor tuples (for readable iteration) and as integer bitmasks (for the set
arithmetic that propagation and the solvers lean on).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Set
from itertools import combinations
from typing import Any

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "build_graph",
    "closed_neighborhood",
    "components",
    "distance",
    "find_claw",
    "induced_subgraph",
    "is_claw_free",
    "is_connected",
    "is_packing",
    "is_regular",
]


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    mask = 0
    for v in ids:
        if v < 0:
            raise ValueError(f"negative vertex id {v}")
        mask |= 1 << v
    return mask


class VertexSet(Set):
    """Ordered, immutable set of vertex ids backed by a bitmask.

    Iteration is always ascending, so ``tuple(s)`` is the canonical member list.
    """

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        self.mask = mask_of(members)

    @classmethod
    def from_mask(cls, mask: int) -> VertexSet:
        obj = cls.__new__(cls)
        obj.mask = mask
        return obj

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: Any) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: Any) -> bool:
        if isinstance(other, VertexSet):
            return self.mask & ~other.mask == 0
        return super().__le__(other)

    def __ge__(self, other: Any) -> bool:
        if isinstance(other, VertexSet):
            return other.mask & ~self.mask == 0
        return super().__ge__(other)

    def __lt__(self, other: Any) -> bool:
        return self <= other and self != other

    def __gt__(self, other: Any) -> bool:
        return self >= other and self != other

    def __or__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.mask | _as_mask(other))

    def __and__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.mask & _as_mask(other))

    def __sub__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.mask & ~_as_mask(other))

    def __xor__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.mask ^ _as_mask(other))

    __ror__ = __or__
    __rand__ = __and__

    def isdisjoint(self, other: Iterable[int]) -> bool:
        return self.mask & _as_mask(other) == 0

    def sort_key(self) -> tuple[int, ...]:
        """Key giving lexicographic order on member lists."""
        return self.members

    def __repr__(self) -> str:
        return f"VertexSet({list(self)})"


def _as_mask(other: Iterable[int]) -> int:
    if isinstance(other, VertexSet):
        return other.mask
    return mask_of(other)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``; immutable after construction.

    Build instances with :func:`build_graph`, which validates the edge list.
    """

    __slots__ = ("n", "adjacency", "edge_count", "_nbr", "_closed")

    def __init__(self, n: int, adjacency: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adjacency = adjacency
        self.edge_count = sum(len(a) for a in adjacency) // 2
        self._nbr = tuple(mask_of(a) for a in adjacency)
        self._closed = tuple(m | (1 << v) for v, m in enumerate(self._nbr))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._nbr[u] >> v & 1)

    def nbr_mask(self, v: int) -> int:
        return self._nbr[v]

    def closed_mask(self, v: int) -> int:
        return self._closed[v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.full_mask)

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        """Bind ``ids`` to this graph, rejecting ids outside ``0..n-1``."""
        s = ids if isinstance(ids, VertexSet) else VertexSet(ids)
        if s.mask >> self.n:
            bad = [v for v in s if v >= self.n]
            raise ValueError(f"vertex ids {bad} out of range for graph with n={self.n}")
        return s

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build the graph.

    Self-loops, out-of-range endpoints and repeated pairs (in either
    orientation) raise :class:`GraphError` naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", (u, v))
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})", (u, v))
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})", (u, v))
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def closed_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    s = g.vertex_set(s)
    mask = 0
    for v in s:
        mask |= g.closed_mask(v)
    return VertexSet.from_mask(mask)


def is_regular(g: Graph, r: int) -> bool:
    return all(len(a) == r for a in g.adjacency)


def regular_degree(g: Graph) -> int | None:
    """Common degree of a regular graph, ``None`` if degrees differ."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return 0 if not degs else None


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically least induced claw as ``(center, leaf, leaf, leaf)``, or ``None``."""
    for c in range(g.n):
        for a, b, d in combinations(g.adjacency[c], 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return (c, a, b, d)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Hop distance between ``u`` and ``v``; ``None`` when they are in different components."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for graph with n={g.n}")
    return bfs_distances(g, u).get(v)


def ball_mask(g: Graph, v: int, radius: int) -> int:
    """Bitmask of vertices within ``radius`` hops of ``v``."""
    mask = 1 << v
    frontier = mask
    for _ in range(radius):
        grown = mask
        for w in iter_bits(frontier):
            grown |= g.nbr_mask(w)
        frontier = grown & ~mask
        if not frontier:
            break
        mask = grown
    return mask


def is_packing(g: Graph, s: Iterable[int]) -> bool:
    """True iff the members of ``s`` are pairwise at distance at least three."""
    s = g.vertex_set(s)
    seen = 0
    for v in s:
        # distance >= 3 for all pairs  <=>  closed neighbourhoods pairwise disjoint
        if g.closed_mask(v) & seen:
            return False
        seen |= g.closed_mask(v)
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(bfs_distances(g, 0)) == g.n


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least member."""
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v not in seen:
            comp = sorted(bfs_distances(g, v))
            seen.update(comp)
            comps.append(comp)
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in ascending order.

    Returns the subgraph and the list mapping new ids back to original ids.
    """
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[w]) for u in old for w in g.adjacency[u] if w in index and u < w]
    return build_graph(len(old), edges), old
