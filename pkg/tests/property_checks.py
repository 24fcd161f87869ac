"""Invariant checks shared by the property tests and the acceptance suite."""

from __future__ import annotations

import random
from itertools import combinations

from corpus import family_instances
from oracles import adjacency, closed_nbhd, cycle, complete, is_kpds, petersen, random_graph, sequential_fixpoint
from powerdom.forts import find_l_configurations, find_minimal_forts
from powerdom.graph import Graph, regular_degree
from powerdom.propagation import monitored_fixpoint, propagate
from powerdom.solvers import gamma_exact, gamma_pk_exact, gamma_t_exact


def check_propagation_monotone(g: Graph, k: int, seed: set[int], extra: set[int]) -> None:
    trace = propagate(g, k, seed)
    for before, after in zip(trace.steps, trace.steps[1:]):
        assert set(before) <= set(after)
    final = set(trace.final)
    assert final <= set(monitored_fixpoint(g, k, seed | extra))
    assert final <= set(monitored_fixpoint(g, k + 1, seed))


def check_confluence(g: Graph, k: int, seed: set[int], rng: random.Random) -> None:
    assert sequential_fixpoint(adjacency(g), k, seed, rng) == set(monitored_fixpoint(g, k, seed))


def check_fort_replay(g: Graph, k: int) -> int:
    """Every optimal k-PDS meets N[F] for every discovered fort; returns the optimum."""
    adj = adjacency(g)
    value = gamma_pk_exact(g, k).value
    closures = [set(f.closure) for f in find_minimal_forts(g, k)]
    optima = [set(c) for c in combinations(range(g.n), value) if is_kpds(adj, k, c)]
    assert optima
    for s in optima:
        for closure in closures:
            assert s & closure
    return value


def check_configuration_subsets(g: Graph, k: int) -> int:
    """Any S inside L with |S| >= |L| - k has N[S] = N[L]; returns configurations checked."""
    adj = adjacency(g)
    configs = find_l_configurations(g, k)
    assert not configs.truncated
    for c in configs:
        members = list(c.l_set)
        for size in range(max(len(members) - k, 1), len(members) + 1):
            for s in combinations(members, size):
                assert closed_nbhd(adj, s) == set(c.span)
    return len(configs)


def single_vertex_rule_applies(g: Graph, k: int, l_size: int) -> bool:
    """Where a single L vertex must monitor the span: always when |L| = k+1, else (k+l+1)-regular with l <= k."""
    if l_size == k + 1:
        return True
    degree = regular_degree(g)
    return degree is not None and degree - k - 1 <= k


def check_configuration_single_vertex(g: Graph, k: int) -> tuple[int, int]:
    """For each configuration in scope and each u in L, span is inside P^inf({u}).

    Returns (checked, out of scope) configuration counts.
    """
    checked = skipped = 0
    configs = find_l_configurations(g, k)
    assert not configs.truncated
    for c in configs:
        if not single_vertex_rule_applies(g, k, len(c.l_set)):
            skipped += 1
            continue
        checked += 1
        for u in c.l_set:
            assert set(c.span) <= set(monitored_fixpoint(g, k, {u}))
    return checked, skipped


def check_parameter_chain(g: Graph, ks=(1, 2, 3)) -> None:
    values = [gamma_pk_exact(g, k).value for k in ks]
    for smaller_k, larger_k in zip(values, values[1:]):
        assert larger_k <= smaller_k
    dom = gamma_exact(g).value
    assert values[0] <= dom
    assert gamma_pk_exact(g, 0).value == dom
    if all(g.adjacency[v] for v in range(g.n)):
        assert dom <= gamma_t_exact(g).value


def configuration_instances(max_n: int = 20):
    """Family instances for the configuration checks; A_j only for k <= 4 (near-complete otherwise)."""
    return [i for i in family_instances(max_n) if i.spec.variant != "aj" or i.spec.k <= 4]


def small_corpus(max_n: int = 16) -> list[tuple[str, Graph, int]]:
    """Named graphs with a propagation parameter; family instances use their own k."""
    out = [(inst.spec.label, inst.graph, inst.k) for inst in family_instances(max_n)]
    out += [("K5", complete(5), 1), ("C7", cycle(7), 1), ("petersen", petersen(), 1)]
    rng = random.Random(2024)
    for i in range(6):
        g = random_graph(rng, rng.randint(6, 11), 0.4)
        out.append((f"random{i}", g, rng.randint(1, 2)))
    return out
