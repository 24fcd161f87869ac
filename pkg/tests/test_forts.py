from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import adjacency, all_forts, brute_gamma_pk, closed_nbhd, complete, cycle, graphs, is_clique, is_fort
from powerdom.families import gen_aj, gen_ckt, gen_drq, gen_godd
from powerdom.forts import (
    FortViolation,
    configuration_span_disjointness,
    disjoint_fort_family,
    find_l_configurations,
    find_minimal_forts,
    fort_hitting_lower_bound,
    largest_fort_avoiding,
    verify_fort,
)
from powerdom.graph import build_graph


def test_drq_side_minus_x_is_fort():
    lg = gen_drq(4, 2)
    fort = set(lg.group("X_1")) - {lg["x_1"]}
    cert = verify_fort(lg.graph, 1, fort)
    assert cert.fort == fort
    assert cert.boundary == set(lg.group("Y_1"))


def test_godd_last_a_block_is_fort():
    lg = gen_godd(5, 1)
    verify_fort(lg.graph, 1, lg.group("A_1"))


def test_violation_names_least_boundary_vertex():
    with pytest.raises(FortViolation) as info:
        verify_fort(complete(4), 3, {0})
    assert (info.value.vertex, info.value.inside) == (1, 1)


def test_empty_set_is_not_a_fort():
    with pytest.raises(FortViolation):
        verify_fort(complete(3), 1, set())


def test_c4_minimal_forts():
    forts = find_minimal_forts(cycle(4), 1)
    assert [list(f.fort) for f in forts] == [[0, 2], [1, 3]]
    for f in forts:
        verify_fort(cycle(4), 1, f.fort)


def test_triangle_whole_set_is_2_fort():
    forts = find_minimal_forts(complete(3), 2)
    assert [set(f.fort) for f in forts] == [{0, 1, 2}]
    assert forts[0].boundary == set()


def test_ckt_fort_in_each_copy():
    lg = gen_ckt(2, 2, 2)
    forts = find_minimal_forts(lg.graph, 2)
    for i in (1, 2):
        copy = set(lg.group(f"C_{i}"))
        assert any(set(f.fort) <= copy for f in forts)


def test_lower_bound_examples():
    d42 = gen_drq(4, 2).graph
    assert fort_hitting_lower_bound(d42, 1, find_minimal_forts(d42, 1)) >= 2
    c = gen_ckt(3, 3, 2)
    forts = [verify_fort(c.graph, 3, c.group(f"L_{i}")) for i in (1, 2)]
    assert fort_hitting_lower_bound(c.graph, 3, forts) == 2
    assert fort_hitting_lower_bound(c.graph, 3, forts[:1]) == 1


def test_lower_bound_rejects_foreign_certificates():
    forts = find_minimal_forts(cycle(4), 1)
    with pytest.raises(ValueError):
        fort_hitting_lower_bound(cycle(4), 2, forts)


def test_aj_is_l_configuration():
    lg = gen_aj(2, 2)
    configs = find_l_configurations(lg.graph, 2)
    assert configs
    assert set(configs[0].l_set) == set(lg.group("L"))
    assert configs[0].span == set(range(lg.graph.n))


def test_c4_has_no_l_configuration():
    assert find_l_configurations(cycle(4), 1) == []


def test_complete_graph_is_its_own_configuration():
    configs = find_l_configurations(complete(8), 3)
    assert len(configs) == 1
    assert configs[0].span == set(range(8))
    assert list(configs[0].l_set) == [0, 1, 2, 3]


def test_span_disjointness_examples():
    g = gen_ckt(2, 2, 2).graph
    configs = find_l_configurations(g, 2)
    assert len(configs) == 2
    assert configuration_span_disjointness(g, 2, configs)
    assert configuration_span_disjointness(g, 2, configs[:1])
    assert configuration_span_disjointness(g, 2, [configs[0], configs[0]])


def test_span_disjointness_detects_overlap():
    # K_4 on 0..3 and triangle 5,6,7, both 1-fort cliques whose spans share vertex 4
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (5, 6), (5, 7), (6, 7)]
    edges += [(0, 4), (1, 4), (4, 5), (4, 6), (4, 7)]
    g = build_graph(8, edges)
    l1 = verify_fort(g, 1, {0, 1, 2, 3})
    l2 = verify_fort(g, 1, {5, 6, 7})
    assert l1.closure & l2.closure == {4}
    assert not configuration_span_disjointness(g, 1, find_l_configurations(g, 1))


def test_truncated_flag():
    configs = find_l_configurations(complete(7), 1, limit=3)
    assert configs.truncated
    assert not find_l_configurations(complete(7), 1).truncated


@given(graphs(max_n=8), st.integers(0, 2))
def test_minimal_forts_are_valid_and_minimal(g, k):
    adj = adjacency(g)
    everything = all_forts(adj, k)
    for cert in find_minimal_forts(g, k):
        f = frozenset(cert.fort)
        assert is_fort(adj, k, f)
        # a fort that is a whole component has no boundary and may be smaller
        assert len(f) >= k + 1 or not cert.boundary
        assert not any(other < f for other in everything)
        assert set(cert.boundary) == closed_nbhd(adj, f) - f


@given(graphs(max_n=8), st.integers(0, 2), st.data())
def test_largest_fort_avoiding_is_union_of_forts(g, k, data):
    avoid = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    union = set()
    for f in all_forts(adjacency(g), k):
        if not f & avoid:
            union |= f
    assert set(largest_fort_avoiding(g, k, avoid)) == union


@given(graphs(max_n=8), st.integers(0, 2))
def test_every_fort_has_at_least_k_plus_one_vertices(g, k):
    for f in all_forts(adjacency(g), k):
        if closed_nbhd(adjacency(g), f) != f:
            assert len(f) >= k + 1


@given(graphs(max_n=8), st.integers(1, 2))
def test_fort_bound_never_exceeds_optimum(g, k):
    forts = find_minimal_forts(g, k)
    value, _ = brute_gamma_pk(adjacency(g), k)
    assert fort_hitting_lower_bound(g, k, forts) <= value


@given(graphs(max_n=8), st.integers(1, 2))
def test_disjoint_family_is_maximum(g, k):
    forts = find_minimal_forts(g, k)
    family = disjoint_fort_family(forts)
    closures = [set(f.closure) for f in forts]
    for a, b in combinations([set(f.closure) for f in family], 2):
        assert not a & b
    best = 0
    for size in range(len(forts), 0, -1):
        if any(all(not closures[i] & closures[j] for i, j in combinations(c, 2))
               for c in combinations(range(len(forts)), size)):
            best = size
            break
    assert len(family) == best


@given(graphs(max_n=8), st.integers(0, 3))
def test_l_configurations_are_clique_forts(g, k):
    adj = adjacency(g)
    configs = find_l_configurations(g, k)
    for c in configs:
        assert is_clique(adj, c.l_set)
        assert is_fort(adj, k, c.l_set)
        assert set(c.span) == closed_nbhd(adj, c.l_set)
    assert len({c.span for c in configs}) == len(configs)
    # every clique fort is represented by its span
    spans = {frozenset(c.span) for c in configs}
    for size in range(k + 1, g.n + 1):
        for clique in combinations(range(g.n), size):
            if is_clique(adj, clique) and is_fort(adj, k, clique):
                assert closed_nbhd(adj, clique) in spans
