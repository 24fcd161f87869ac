"""Structural invariants replayed on the family corpus."""

from __future__ import annotations

import pytest

from oracles import adjacency, complete
from powerdom.families import gen_godd
from powerdom.forts import find_l_configurations
from powerdom.propagation import monitored_fixpoint
from property_checks import (
    check_fort_replay,
    check_configuration_single_vertex,
    check_configuration_subsets,
    check_parameter_chain,
    configuration_instances,
    single_vertex_rule_applies,
    small_corpus,
)

CORPUS = small_corpus(16)
FAMILIES_20 = configuration_instances(20)


@pytest.mark.parametrize("name, g, k", CORPUS, ids=[c[0] for c in CORPUS])
def test_optimal_witnesses_meet_every_fort(name, g, k):
    check_fort_replay(g, k)


@pytest.mark.parametrize("name, g, k", CORPUS, ids=[c[0] for c in CORPUS])
def test_parameter_chain(name, g, k):
    check_parameter_chain(g)


@pytest.mark.parametrize("inst", FAMILIES_20, ids=lambda i: i.spec.label)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_configuration_subsets_cover_span(inst, k):
    check_configuration_subsets(inst.graph, k)


@pytest.mark.parametrize("inst", FAMILIES_20, ids=lambda i: i.spec.label)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_single_configuration_vertex_monitors_span(inst, k):
    check_configuration_single_vertex(inst.graph, k)


def test_single_vertex_rule_needs_l_at_most_k():
    # G_{5,1} with k = 1 is 5-regular, so l = 3 > k and the single-vertex property breaks
    g = gen_godd(5, 1).graph
    configs = find_l_configurations(g, 1)
    out_of_scope = [c for c in configs if not single_vertex_rule_applies(g, 1, len(c.l_set))]
    assert out_of_scope
    c = out_of_scope[0]
    u = min(c.l_set)
    assert not set(c.span) <= set(monitored_fixpoint(g, 1, {u}))


def test_single_vertex_rule_on_complete_graph():
    g = complete(8)
    assert check_configuration_single_vertex(g, 3) == (1, 0)
    assert adjacency(g)[0] == set(range(1, 8))
