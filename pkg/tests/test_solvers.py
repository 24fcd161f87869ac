from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    adjacency,
    brute_gamma_pk,
    brute_minimum,
    complete,
    cycle,
    graphs,
    is_dominating,
    is_total_dominating,
    petersen,
    star,
)
from powerdom.families import gen_ckt, gen_drq, gen_f0q, gen_geven, gen_godd, gen_h0q
from powerdom.graph import build_graph
from powerdom.propagation import is_kpds
from powerdom.solvers import BudgetExhausted, default_budget, gamma_exact, gamma_pk_exact, gamma_t_exact, solve


@pytest.mark.parametrize(
    "g, k, value",
    [
        (gen_drq(4, 2).graph, 1, 4),
        (gen_godd(5, 1).graph, 1, 2),
        (gen_geven(4, 1).graph, 1, 2),
        (complete(5), 1, 1),
        (gen_ckt(2, 2, 2).graph, 2, 2),
    ],
)
def test_gamma_pk_examples(g, k, value):
    res = gamma_pk_exact(g, k)
    assert res.value == value
    assert is_kpds(g, k, res.witness)
    assert res.method == "exact"


def test_gamma_examples():
    assert gamma_exact(cycle(4)).value == 2
    assert gamma_exact(gen_h0q(2).graph).value == 4
    assert gamma_exact(complete(6)).value == 1


def test_gamma_t_examples():
    assert gamma_t_exact(complete(4)).value == 2
    assert gamma_t_exact(gen_f0q(2).graph).value == 4
    assert gamma_t_exact(star(3)).value == 2


def test_gamma_t_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        gamma_t_exact(build_graph(3, [(0, 1)]))


def test_disconnected_graph_sums_components():
    g = build_graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert gamma_exact(g).value == 1 + 2
    assert gamma_pk_exact(g, 1).value == 2
    assert list(gamma_exact(g).witness) == [1, 3, 4]


def test_empty_graph():
    assert gamma_pk_exact(build_graph(0, []), 1).value == 0


def test_witness_is_lexicographically_least():
    res = gamma_exact(cycle(6))
    assert list(res.witness) == [0, 3]


def test_budget_exhausted_carries_bounds():
    with pytest.raises(BudgetExhausted) as info:
        gamma_pk_exact(gen_drq(4, 2).graph, 1, budget=5)
    exc = info.value
    assert exc.lower <= 4 <= exc.upper
    assert exc.explored == 5


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("POWERDOM_BUDGET", "3")
    assert default_budget() == 3
    with pytest.raises(BudgetExhausted):
        gamma_exact(petersen())
    monkeypatch.setenv("POWERDOM_BUDGET", "lots")
    assert default_budget() == 10**8


def test_result_document():
    doc = gamma_pk_exact(gen_drq(4, 2).graph, 1).to_dict()
    assert {"value", "witness", "method", "explored"} <= set(doc)
    assert doc["value"] == 4
    assert doc["lower_bound_used"] >= 1
    assert "k" not in solve(cycle(4), "dom").to_dict()


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        gamma_pk_exact(cycle(4), -1)


@given(graphs(max_n=9), st.integers(0, 3))
def test_pk_matches_brute_force(g, k):
    value, optima = brute_gamma_pk(adjacency(g), k)
    res = gamma_pk_exact(g, k)
    assert res.value == value
    assert tuple(res.witness) == min(optima)


@given(graphs(max_n=9))
def test_dom_matches_brute_force(g):
    adj = adjacency(g)
    value, optima = brute_minimum(adj, lambda c: is_dominating(adj, c))
    res = gamma_exact(g)
    assert res.value == value and tuple(res.witness) == min(optima)


@given(graphs(max_n=9))
def test_tdom_matches_brute_force(g):
    adj = adjacency(g)
    if any(not adj[v] for v in adj):
        return
    value, optima = brute_minimum(adj, lambda c: is_total_dominating(adj, c))
    res = gamma_t_exact(g)
    assert res.value == value and tuple(res.witness) == min(optima)


def test_agrees_with_brute_force_on_ten_vertex_graphs():
    for g in (petersen(), cycle(10), gen_godd(5, 1).graph):
        adj = adjacency(g)
        for k in (1, 2):
            assert gamma_pk_exact(g, k).value == brute_gamma_pk(adj, k)[0]


@given(graphs(max_n=9), st.integers(0, 2))
def test_pk_chain(g, k):
    pk = gamma_pk_exact(g, k).value
    assert gamma_pk_exact(g, k + 1).value <= pk <= gamma_exact(g).value
    assert gamma_pk_exact(g, k).lower_bound_used <= pk
    if all(g.adjacency[v] for v in range(g.n)):
        assert gamma_exact(g).value <= gamma_t_exact(g).value


@given(graphs(max_n=9))
def test_k_zero_equals_domination(g):
    assert gamma_pk_exact(g, 0).value == gamma_exact(g).value
