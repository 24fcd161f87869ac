"""Exact optima for k-power domination, domination and total domination.

All three share one search: iterative deepening on the set size, enumerating
candidate sets in lexicographic order so the first feasible set found is the
lexicographically least optimum.  For k-power domination a family of forts
with pairwise disjoint closed neighbourhoods prunes the enumeration and sets
the starting size.  Disconnected graphs are solved per component and summed.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Callable, Literal

from powerdom.forts import disjoint_fort_family, find_minimal_forts
from powerdom.graph import Graph, VertexSet, components, induced_subgraph, iter_bits
from powerdom.propagation import fixpoint_mask

log = logging.getLogger(__name__)

__all__ = [
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "SolveResult",
    "default_budget",
    "gamma_exact",
    "gamma_pk_exact",
    "gamma_t_exact",
]

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "POWERDOM_BUDGET"

Param = Literal["pk", "dom", "tdom"]


class BudgetExhausted(RuntimeError):
    """The search ran out of feasibility evaluations before proving optimality.

    ``lower`` is the best proven lower bound and ``upper`` a known feasible size.
    """

    def __init__(self, lower: int, upper: int, explored: int):
        super().__init__(
            f"budget exhausted after {explored} evaluations; optimum in [{lower}, {upper}]"
        )
        self.lower = lower
        self.upper = upper
        self.explored = explored


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    method: str
    explored: int
    lower_bound_used: int = 0
    param: str = "pk"
    k: int | None = None

    def to_dict(self) -> dict:
        doc = {
            "param": self.param,
            "value": self.value,
            "witness": list(self.witness),
            "method": self.method,
            "explored": self.explored,
        }
        if self.param == "pk":
            doc["k"] = self.k
            doc["lower_bound_used"] = self.lower_bound_used
        return doc


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            log.warning("ignoring non-integer %s=%r", BUDGET_ENV, raw)
    return DEFAULT_BUDGET


class _Meter:
    def __init__(self, budget: int):
        self.budget = budget
        self.used = 0

    def tick(self) -> bool:
        if self.used >= self.budget:
            return False
        self.used += 1
        return True


class _OutOfBudget(Exception):
    pass


def _first_feasible(
    n: int, size: int, feasible: Callable[[int], bool], must_hit: list[int], meter: _Meter
) -> tuple[int, ...] | None:
    """Lexicographically first ``size``-subset of ``0..n-1`` passing ``feasible``.

    ``must_hit`` masks are pairwise disjoint; every accepted set meets each one.
    """
    chosen: list[int] = []

    def rec(nxt: int, mask: int, unhit: list[int]) -> tuple[int, ...] | None:
        slots = size - len(chosen)
        if slots == 0:
            if unhit:
                return None
            if not meter.tick():
                raise _OutOfBudget
            return tuple(chosen) if feasible(mask) else None
        # disjoint targets each need their own vertex
        if len(unhit) > slots:
            return None
        for m in unhit:
            if not m >> nxt:
                return None
        for v in range(nxt, n - slots + 1):
            bit = 1 << v
            chosen.append(v)
            found = rec(v + 1, mask | bit, [m for m in unhit if not m & bit])
            chosen.pop()
            if found is not None:
                return found
        return None

    return rec(0, 0, must_hit)


def _solve_connected(g: Graph, param: Param, k: int, meter: _Meter) -> tuple[tuple[int, ...], int]:
    full = g.full_mask
    must_hit: list[int] = []
    start = 1
    if param == "pk":
        family = disjoint_fort_family(find_minimal_forts(g, k))
        must_hit = [f.closure.mask for f in family]
        start = max(1, len(family))

        def feasible(mask: int) -> bool:
            return fixpoint_mask(g, k, mask) == full

    elif param == "dom":

        def feasible(mask: int) -> bool:
            covered = 0
            for v in iter_bits(mask):
                covered |= g.closed_mask(v)
            return covered == full

    else:

        def feasible(mask: int) -> bool:
            covered = 0
            for v in iter_bits(mask):
                covered |= g.nbr_mask(v)
            return covered == full

    for size in range(start, g.n + 1):
        try:
            found = _first_feasible(g.n, size, feasible, must_hit, meter)
        except _OutOfBudget:
            raise BudgetExhausted(size, g.n, meter.used) from None
        if found is not None:
            return found, len(must_hit)
    raise AssertionError("the full vertex set is always feasible")


def _solve(g: Graph, param: Param, k: int, budget: int | None) -> SolveResult:
    if param == "pk" and k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if param == "tdom":
        isolated = [v for v in range(g.n) if not g.adjacency[v]]
        if isolated:
            raise ValueError(f"total domination undefined: isolated vertex {isolated[0]}")
    meter = _Meter(default_budget() if budget is None else budget)
    witness: list[int] = []
    bound = 0
    value = 0
    for comp in components(g):
        sub, back = induced_subgraph(g, comp)
        try:
            found, lb = _solve_connected(sub, param, k, meter)
        except BudgetExhausted as exc:
            raise BudgetExhausted(value + exc.lower, g.n, meter.used) from None
        witness += [back[v] for v in found]
        value += len(found)
        bound += lb
    log.debug("%s solve on %r: value %d after %d evaluations", param, g, value, meter.used)
    return SolveResult(
        value=value,
        witness=VertexSet(witness),
        method="exact",
        explored=meter.used,
        lower_bound_used=bound,
        param=param,
        k=k if param == "pk" else None,
    )


def gamma_pk_exact(g: Graph, k: int, budget: int | None = None) -> SolveResult:
    """Minimum k-power dominating set, with fort-packing pruning.

    ``budget`` caps feasibility evaluations (default from ``POWERDOM_BUDGET`` or
    10^8); exceeding it raises :class:`BudgetExhausted`.
    """
    return _solve(g, "pk", k, budget)


def gamma_exact(g: Graph, budget: int | None = None) -> SolveResult:
    """Minimum dominating set."""
    return _solve(g, "dom", 0, budget)


def gamma_t_exact(g: Graph, budget: int | None = None) -> SolveResult:
    """Minimum total dominating set; rejects graphs with isolated vertices."""
    return _solve(g, "tdom", 0, budget)


def solve(g: Graph, param: Param, k: int = 1, budget: int | None = None) -> SolveResult:
    return _solve(g, param, k, budget)
