"""Blow-up constructions that carry domination-type numbers into k-power domination.

Both replace each vertex ``v_i`` by ``s`` copies ``v_i^1 .. v_i^s`` and each edge by
the complete join between the copy sets.  Source vertex ``i`` maps to output
ids ``i·s .. i·s + s - 1``.
"""

from __future__ import annotations

from itertools import combinations

from powerdom.families import DomainError, LabeledGraph
from powerdom.graph import Graph, build_graph, find_claw, regular_degree

__all__ = ["blowup_clique", "blowup_independent"]


def _blowup(g: Graph, size: int, clique: bool) -> LabeledGraph:
    def copies(i: int) -> range:
        return range(i * size, (i + 1) * size)

    edges = []
    for u, v in g.edges():
        edges += [(a, b) for a in copies(u) for b in copies(v)]
    if clique:
        for i in range(g.n):
            edges += combinations(copies(i), 2)
    labels = {f"v_{i + 1}^{s + 1}": i * size + s for i in range(g.n) for s in range(size)}
    groups = {f"V_{i + 1}": tuple(copies(i)) for i in range(g.n)}
    return LabeledGraph(build_graph(g.n * size, edges), labels, groups)


def _require_regular(g: Graph) -> int:
    r = regular_degree(g)
    if r is None:
        raise DomainError("blow-up needs a regular input graph")
    return r


def blowup_independent(g: Graph, k: int) -> LabeledGraph:
    """Replace each vertex by an independent set of ``k + 2`` vertices.

    For a regular ``g`` the result is ``(k+2)r``-regular of order ``(k+2)n``, and
    its k-power domination number equals the total domination number of ``g``.
    """
    if k < 1:
        raise DomainError(f"independent blow-up needs k >= 1, got k={k}")
    _require_regular(g)
    return _blowup(g, k + 2, clique=False)


def blowup_clique(g: Graph, k: int) -> LabeledGraph:
    """Replace each vertex by a clique of ``k + 1`` vertices.

    For a regular claw-free ``g`` the result is claw-free and
    ``(kr + r + k)``-regular of order ``(k+1)n``, and its k-power domination number
    equals the domination number of ``g``.
    """
    if k < 1:
        raise DomainError(f"clique blow-up needs k >= 1, got k={k}")
    _require_regular(g)
    claw = find_claw(g)
    if claw is not None:
        raise DomainError(f"clique blow-up needs a claw-free input; found claw {claw}")
    return _blowup(g, k + 1, clique=True)
