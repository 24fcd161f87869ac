"""Monitored-set propagation for generalized (k-)power domination.

Starting from ``P^0 = N[S]``, each synchronous round takes the union of
``N[v]`` over every monitored ``v`` with at most ``k`` unmonitored vertices in
its closed neighbourhood.  The sequence grows monotonically and stops at a
fixed point; ``S`` is a k-power dominating set when that fixed point is ``V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from powerdom.graph import Graph, VertexSet, iter_bits

__all__ = [
    "Cause",
    "PropagationTrace",
    "fixpoint_mask",
    "is_kpds",
    "monitored_fixpoint",
    "propagate",
    "propagation_round",
]


@dataclass(frozen=True)
class Cause:
    """Why a vertex became monitored.

    ``kind == "initial"``: it lies in ``N[seed]`` (``by`` is None, ``step`` is 0).
    ``kind == "forced"``: vertex ``by`` qualified in ``steps[step - 1]`` and its
    closed neighbourhood brought this vertex in at ``steps[step]``.
    """

    kind: Literal["initial", "forced"]
    by: int | None
    step: int

    def to_dict(self) -> dict:
        return {"type": self.kind, "by": self.by, "step": self.step}


@dataclass(frozen=True)
class PropagationTrace:
    k: int
    seed: VertexSet
    steps: tuple[VertexSet, ...]
    causes: dict[int, Cause] = field(repr=False)

    @property
    def final(self) -> VertexSet:
        return self.steps[-1]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "seed": list(self.seed),
            "steps": [list(s) for s in self.steps],
            "causes": {str(v): self.causes[v].to_dict() for v in sorted(self.causes)},
        }


def _round(g: Graph, k: int, monitored: int) -> int:
    grown = 0
    for v in iter_bits(monitored):
        closed = g.closed_mask(v)
        if (closed & ~monitored).bit_count() <= k:
            grown |= closed
    return grown


def _validated(g: Graph, k: int, seed: Iterable[int]) -> VertexSet:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return g.vertex_set(seed)


def propagation_round(g: Graph, k: int, monitored: Iterable[int]) -> VertexSet:
    """One synchronous application of the propagation rule to ``monitored``."""
    return VertexSet.from_mask(_round(g, k, _validated(g, k, monitored).mask))


def fixpoint_mask(g: Graph, k: int, seed_mask: int) -> int:
    """Bitmask form of :func:`monitored_fixpoint`, without validation. Hot path for solvers."""
    current = 0
    for v in iter_bits(seed_mask):
        current |= g.closed_mask(v)
    while True:
        nxt = _round(g, k, current)
        if nxt == current:
            return current
        current = nxt


def propagate(g: Graph, k: int, seed: Iterable[int]) -> PropagationTrace:
    """Run propagation to its fixed point and record every intermediate monitored set.

    ``steps`` is strictly increasing and ends with the fixed point (no repeated
    terminal entry).  Each newly monitored vertex is attributed to the
    least-id qualifying vertex whose closed neighbourhood contains it.
    """
    seed = _validated(g, k, seed)
    causes: dict[int, Cause] = {}
    current = 0
    for v in seed:
        current |= g.closed_mask(v)
    for v in iter_bits(current):
        causes[v] = Cause("initial", None, 0)
    steps = [VertexSet.from_mask(current)]
    while True:
        grown = 0
        for v in iter_bits(current):
            closed = g.closed_mask(v)
            if (closed & ~current).bit_count() <= k:
                fresh = closed & ~current & ~grown
                for w in iter_bits(fresh):
                    causes[w] = Cause("forced", v, len(steps))
                grown |= closed
        if grown == current:
            break
        current = grown
        steps.append(VertexSet.from_mask(current))
    return PropagationTrace(k=k, seed=seed, steps=tuple(steps), causes=causes)


def monitored_fixpoint(g: Graph, k: int, seed: Iterable[int]) -> VertexSet:
    seed = _validated(g, k, seed)
    return VertexSet.from_mask(fixpoint_mask(g, k, seed.mask))


def is_kpds(g: Graph, k: int, seed: Iterable[int]) -> bool:
    seed = _validated(g, k, seed)
    return fixpoint_mask(g, k, seed.mask) == g.full_mask
