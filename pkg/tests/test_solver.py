import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from oracles import brute_chi, chidom_partition_dp
from domchrom.chromatic import (
    Coloring,
    chromatic_number,
    dominated_chromatic_number,
    oracle_dominated_chromatic,
    restricted_growth_strings,
    total_dominator_chromatic_number,
)
from domchrom.enumeration import enumerate_connected_graphs
from domchrom.errors import ArgumentError, BudgetError, DomainError
from domchrom.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, wheel_graph
from domchrom.ops import subdivide


def petersen() -> Graph:
    return Graph.from_edges(10, nx.petersen_graph().edges())


def test_chi_examples():
    assert chromatic_number(cycle_graph(5)).value == 3
    assert chromatic_number(complete_graph(6)).value == 6


def test_chi_petersen_against_enumeration():
    g = petersen()
    assert brute_chi(g) == 3
    res = chromatic_number(g)
    assert res.value == 3 and res.certificate.is_valid(g)


@pytest.mark.parametrize(
    "g,expected",
    [(path_graph(4), 2), (cycle_graph(5), 3), (complete_graph(5), 5), (star_graph(4), 2)],
)
def test_chidom_examples(g, expected):
    res = dominated_chromatic_number(g)
    assert res.value == expected
    assert res.certificate.is_valid(g)
    assert res.certificate.coloring.k == expected


def test_chidt_examples():
    assert total_dominator_chromatic_number(complete_graph(4)).value == 4
    assert total_dominator_chromatic_number(star_graph(3)).value == 2
    assert total_dominator_chromatic_number(complete_graph(2)).value == 2


def test_domain_and_budget_errors():
    with pytest.raises(DomainError):
        dominated_chromatic_number(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(DomainError):
        total_dominator_chromatic_number(Graph.empty(1))
    with pytest.raises(ArgumentError):
        dominated_chromatic_number(Graph.empty(0))
    with pytest.raises(BudgetError):
        dominated_chromatic_number(cycle_graph(41))
    assert dominated_chromatic_number(cycle_graph(41), max_vertices=41).value == 21
    with pytest.raises(BudgetError):
        oracle_dominated_chromatic(cycle_graph(9))


def test_oracle_examples():
    assert oracle_dominated_chromatic(cycle_graph(6)) == 4
    assert oracle_dominated_chromatic(cycle_graph(8)) == 4
    assert oracle_dominated_chromatic(complete_graph(3)) == 3


def test_restricted_growth_strings_count_bell_numbers():
    # Bell numbers 1, 2, 5, 15, 52, 203
    assert [sum(1 for _ in restricted_growth_strings(n, n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_solver_matches_oracle_exhaustive(n):
    for g in enumerate_connected_graphs(n):
        assert dominated_chromatic_number(g).value == oracle_dominated_chromatic(g)


def test_solver_matches_oracle_random_7_8():
    rng = random.Random(7)
    done = 0
    while done < 200:
        n = 7 + done % 2
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
        if g.has_isolated_vertex():
            continue
        assert dominated_chromatic_number(g).value == oracle_dominated_chromatic(g), g
        done += 1


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=10))
def test_certificates_sound_and_sandwiched(g):
    if g.has_isolated_vertex():
        return
    chi = chromatic_number(g)
    dom = dominated_chromatic_number(g)
    dt = total_dominator_chromatic_number(g)
    for res in (chi, dom, dt):
        assert res.certificate.is_valid(g)
        assert res.certificate.coloring.k == res.value
        assert res.certificate.coloring.is_canonical()
        assert Coloring.canonical(res.certificate.coloring.colors) == res.certificate.coloring
    assert chi.value <= dom.value <= g.n
    assert dom.value == chidom_partition_dp(g)


@pytest.mark.parametrize("g", [petersen(), wheel_graph(7), subdivide(star_graph(3), 3)[0], subdivide(complete_graph(4), 2)[0]])
def test_medium_graphs_against_partition_dp(g):
    assert dominated_chromatic_number(g).value == chidom_partition_dp(g)


def test_stats_are_counted():
    res = dominated_chromatic_number(cycle_graph(7))
    assert res.stats.nodes > 0 and res.stats.decisions > 0 and res.stats.elapsed >= 0
    assert set(res.to_json()) == {"value", "certificate", "stats"}
