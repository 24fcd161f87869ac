"""Constructive k-power dominating sets for claw-free ``(k+l+1)``-regular graphs.

The set is grown from a seed packing: one vertex from each L-configuration not
yet monitored, extended greedily to a maximal packing ``S_0``.  Vertices are
then added one at a time, each time taking the unmonitored vertex whose
addition monitors the most new vertices.  On conforming inputs (connected,
claw-free, ``l`` in {2, 3}, ``k >= l``) every step is guaranteed to gain at
least ``k + l + 2``; together with ``|N[S_0]| = (k+l+2)|S_0|`` this bounds the
result by ``n / (k + l + 2)``.  The run is *certified* when both facts are
observed.  Non-conforming inputs still get a valid, uncertified k-PDS.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from powerdom.families import DomainError
from powerdom.forts import find_l_configurations
from powerdom.graph import Graph, VertexSet, find_claw, is_connected, iter_bits, regular_degree
from powerdom.propagation import fixpoint_mask

__all__ = [
    "BoundaryContext",
    "CertifiedSolution",
    "HypothesisError",
    "boundary_context",
    "build_seed_packing",
    "constructive_kpds",
    "grow_sequence",
    "hypothesis_failures",
]


class HypothesisError(DomainError):
    """The graph does not satisfy the constructive bound's hypotheses."""

    def __init__(self, failures: list[str]):
        super().__init__("hypotheses violated: " + "; ".join(failures))
        self.failures = failures


@dataclass(frozen=True)
class BoundaryContext:
    """Monitored set ``M`` with its frontier.

    For each frontier vertex ``u``: ``unmonitored[u]`` is ``L_u = N(u) \\ M``,
    ``outer[u]`` is ``F_u = N(L_u) \\ L_u`` (which contains ``u``).
    """

    monitored: VertexSet
    frontier: VertexSet
    unmonitored: dict[int, VertexSet]
    outer: dict[int, VertexSet]

    def outer_without(self, u: int) -> VertexSet:
        """``F'_u``."""
        return self.outer[u] - {u}


@dataclass(frozen=True)
class CertifiedSolution:
    pds: VertexSet
    sequence: tuple[tuple[int, int], ...]
    initial_packing: VertexSet
    certified: bool
    bound: Fraction | None
    k: int
    l: int | None
    conforming: bool
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "value": len(self.pds),
            "witness": list(self.pds),
            "method": "constructive",
            "k": self.k,
            "l": self.l,
            "certified": self.certified,
            "bound": None if self.bound is None else str(self.bound),
            "initial_packing": list(self.initial_packing),
            "sequence": [list(step) for step in self.sequence],
        }


def hypothesis_failures(g: Graph, k: int) -> tuple[int | None, list[str]]:
    """Infer ``l = degree - k - 1`` and list every violated hypothesis."""
    failures = []
    if not is_connected(g):
        failures.append("graph is not connected")
    degree = regular_degree(g)
    l = None
    if degree is None:
        failures.append("graph is not regular")
    else:
        l = degree - k - 1
        if l not in (2, 3):
            failures.append(f"l = degree - k - 1 = {l} is not in {{2, 3}}")
        elif k < l:
            failures.append(f"k = {k} is smaller than l = {l}")
    claw = find_claw(g)
    if claw is not None:
        failures.append(f"graph has an induced claw {claw}")
    return l, failures


def _packing_extend(g: Graph, seed: int) -> int:
    covered = 0
    for v in iter_bits(seed):
        covered |= g.closed_mask(v)
    for v in range(g.n):
        if not g.closed_mask(v) & covered:
            seed |= 1 << v
            covered |= g.closed_mask(v)
    return seed


def build_seed_packing(g: Graph, k: int, strict: bool = True) -> VertexSet:
    """Seed packing ``S_0``.

    Repeatedly take the least L-configuration whose clique is disjoint from the
    currently monitored set and add its least vertex; then extend to a maximal
    packing by scanning vertex ids upward.  With ``strict`` the hypotheses are
    checked first and :class:`HypothesisError` lists every failure.
    """
    if strict:
        _, failures = hypothesis_failures(g, k)
        if failures:
            raise HypothesisError(failures)
    configs = find_l_configurations(g, k)
    chosen = 0
    monitored = 0
    progress = True
    while progress:
        progress = False
        for cfg in configs:
            if not cfg.l_set.mask & monitored:
                chosen |= 1 << next(iter(cfg.l_set))
                monitored = fixpoint_mask(g, k, chosen)
                progress = True
                break
    return VertexSet.from_mask(_packing_extend(g, chosen))


def boundary_context(g: Graph, monitored: Iterable[int]) -> BoundaryContext:
    m = g.vertex_set(monitored).mask
    outside = g.full_mask & ~m
    frontier = 0
    unmonitored: dict[int, VertexSet] = {}
    outer: dict[int, VertexSet] = {}
    for u in iter_bits(m):
        lu = g.nbr_mask(u) & outside
        if not lu:
            continue
        frontier |= 1 << u
        fu = 0
        for x in iter_bits(lu):
            fu |= g.nbr_mask(x)
        unmonitored[u] = VertexSet.from_mask(lu)
        outer[u] = VertexSet.from_mask(fu & ~lu)
    return BoundaryContext(VertexSet.from_mask(m), VertexSet.from_mask(frontier), unmonitored, outer)


def _is_clique(g: Graph, s: VertexSet) -> bool:
    members = list(s)
    return all(g.has_edge(a, b) for i, a in enumerate(members) for b in members[i + 1:])


def grow_sequence(
    g: Graph, k: int, l: int | None, s0: Iterable[int], conforming: bool | None = None
) -> CertifiedSolution:
    """Grow ``s0`` to a k-PDS by maximum-gain additions (ties to the least id).

    ``conforming`` defaults to checking the hypotheses for ``(g, k)``.  On a
    conforming run every frontier set ``L_u`` is checked to be a clique and
    ``k + 1 <= |L_u| <= k + l``; a violation raises ``AssertionError``.
    """
    s0 = g.vertex_set(s0)
    if conforming is None:
        inferred, failures = hypothesis_failures(g, k)
        conforming = not failures and inferred == l
    target = None if l is None else k + l + 2
    full = g.full_mask
    chosen = s0.mask
    monitored = fixpoint_mask(g, k, chosen)
    sequence: list[tuple[int, int]] = []
    while monitored != full:
        if conforming:
            ctx = boundary_context(g, VertexSet.from_mask(monitored))
            for u, lu in ctx.unmonitored.items():
                if not _is_clique(g, lu) or not k + 1 <= len(lu) <= k + l:
                    raise AssertionError(f"frontier vertex {u}: L_u={list(lu)} breaks the claw-free structure")
        best, best_size = -1, -1
        for x in iter_bits(full & ~monitored):
            size = fixpoint_mask(g, k, chosen | (1 << x)).bit_count()
            if size > best_size:
                best, best_size = x, size
        sequence.append((best, best_size - monitored.bit_count()))
        chosen |= 1 << best
        monitored = fixpoint_mask(g, k, chosen)

    notes = []
    saturated = False
    if target is not None:
        closed = 0
        for v in iter_bits(s0.mask):
            closed |= g.closed_mask(v)
        saturated = closed.bit_count() == target * len(s0)
        if not saturated:
            notes.append(f"|N[S_0]| = {closed.bit_count()} != {target}·|S_0| = {target * len(s0)}")
        short = [(x, gain) for x, gain in sequence if gain < target]
        if short:
            notes.append(f"steps below gain {target}: {short}")
    if not conforming:
        notes.append("input does not satisfy the hypotheses; result is uncertified")
    certified = bool(conforming and saturated and target is not None and all(gain >= target for _, gain in sequence))
    pds = VertexSet.from_mask(chosen)
    bound = None if target is None or target <= 0 else Fraction(g.n, target)
    if certified and target * len(pds) > g.n:
        raise AssertionError("certified run exceeded n/(k+l+2)")
    return CertifiedSolution(
        pds=pds,
        sequence=tuple(sequence),
        initial_packing=s0,
        certified=certified,
        bound=bound,
        k=k,
        l=l,
        conforming=conforming,
        notes=tuple(notes),
    )


def constructive_kpds(g: Graph, k: int) -> CertifiedSolution:
    """Seed packing followed by greedy growth; certified on conforming inputs."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    l, failures = hypothesis_failures(g, k)
    s0 = build_seed_packing(g, k, strict=False)
    return grow_sequence(g, k, l, s0, conforming=not failures)
