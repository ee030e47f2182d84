import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import to_nx
from domchrom.errors import ArgumentError
from domchrom.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    star_on_vertices,
    wheel_graph,
)
from domchrom.ops import (
    OperationDescriptor,
    apply_operation,
    contract_edge,
    contract_vertex,
    delete_edge,
    delete_vertex,
    odot_vertex,
    subdivide,
)


def iso(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))


# -- examples -----------------------------------------------------------------


@pytest.mark.parametrize("e", [(0, 1), (0, 2), (1, 2)])
def test_k3_minus_edge_is_p3(e):
    assert iso(delete_edge(complete_graph(3), e), path_graph(3))


def test_c4_minus_edge_is_p4():
    assert delete_edge(cycle_graph(4), (0, 3)) == path_graph(4)


def test_delete_edge_missing():
    with pytest.raises(ArgumentError):
        delete_edge(path_graph(3), (0, 2))


def test_wheel_minus_hub_is_cycle():
    g, mapping = delete_vertex(wheel_graph(5), 5)
    assert g == cycle_graph(5)
    assert mapping == {i: i for i in range(5)}


def test_delete_vertex_renumbers():
    g, mapping = delete_vertex(path_graph(3), 0)
    assert g == path_graph(2)
    assert mapping == {1: 0, 2: 1}
    assert delete_vertex(complete_graph(5), 2)[0] == complete_graph(4)


def test_delete_last_vertex():
    with pytest.raises(ArgumentError):
        delete_vertex(Graph.empty(1), 0)


def test_contract_edge_c4_gives_k3():
    g, mapping = contract_edge(cycle_graph(4), (0, 1))
    assert g == complete_graph(3)
    assert mapping == {0: 0, 1: 0, 2: 1, 3: 2}


def test_contract_edge_collapses_common_neighbor():
    g, _ = contract_edge(complete_graph(3), (1, 2))
    assert g == complete_graph(2)


def test_contract_end_edge_of_p3():
    assert contract_edge(path_graph(3), (1, 2))[0] == path_graph(2)


def test_contract_vertex_examples():
    assert contract_vertex(cycle_graph(4), 0)[0] == complete_graph(3)
    assert iso(contract_vertex(cycle_graph(5), 2)[0], cycle_graph(4))
    assert contract_vertex(star_graph(3), 0)[0] == complete_graph(3)


@pytest.mark.parametrize("n", range(3, 8))
def test_odot_on_complete_is_star(n):
    assert odot_vertex(complete_graph(n), 0) == star_on_vertices(n)
    assert iso(odot_vertex(complete_graph(n), n - 1), star_on_vertices(n))


def test_odot_fixed_point_and_k4():
    assert odot_vertex(cycle_graph(5), 0) == cycle_graph(5)
    assert iso(odot_vertex(wheel_graph(3), 3), star_graph(3))


def test_subdivide_examples():
    h, _ = subdivide(complete_graph(3), 2)
    assert iso(h, cycle_graph(6))
    h, _ = subdivide(star_graph(3), 3)
    assert (h.n, h.m) == (10, 9)
    g = wheel_graph(4)
    assert subdivide(g, 1)[0] == g
    with pytest.raises(ArgumentError):
        subdivide(g, 0)


def test_subdivision_labeling_order_and_paths():
    g = complete_graph(3)
    h, lab = subdivide(g, 3)
    # originals first, then superedges (0,1), (0,2), (1,2) by increasing l
    assert lab.original_vertex_map == {0: 0, 1: 1, 2: 2}
    assert [lab.internal_vertex_map[(0, 1, l)] for l in (1, 2)] == [3, 4]
    assert [lab.internal_vertex_map[(1, 2, l)] for l in (1, 2)] == [7, 8]
    ids = sorted(lab.original_vertex_map.values()) + sorted(lab.internal_vertex_map.values())
    assert ids == list(range(h.n))
    for i, j in g.edges():
        path = lab.superedge(i, j)
        assert all(h.has_edge(a, b) for a, b in zip(path, path[1:]))
        for x in path[1:-1]:
            assert h.degree(x) == 2


def test_descriptor_json_round_trip():
    for op in [
        OperationDescriptor("delete_edge", edge=(3, 1)),
        OperationDescriptor("odot_vertex", vertex=2),
        OperationDescriptor("subdivide", k=4),
    ]:
        assert OperationDescriptor.from_json(op.to_json()) == op
    assert OperationDescriptor("contract_edge", edge=(3, 1)).to_json() == {"kind": "contract_edge", "edge": [1, 3]}
    with pytest.raises(ArgumentError):
        OperationDescriptor("delete_vertex", edge=(0, 1))


# -- invariants ---------------------------------------------------------------


def _pairs_missing(g, mask):
    vs = [v for v in range(g.n) if (mask >> v) & 1]
    return sum(1 for i, a in enumerate(vs) for b in vs[i + 1 :] if not g.has_edge(a, b))


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=2, max_n=8), st.data())
def test_counting_invariants(g, data):
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        assert h.n == g.n - 1 and h.m == g.m - g.degree(v)
        h, _ = contract_vertex(g, v)
        assert h.n == g.n - 1
        assert h.m == g.m - g.degree(v) + _pairs_missing(g, g.masks[v])
        h = odot_vertex(g, v)
        assert h.degree(v) == g.degree(v)
        assert all(h.degree(w) <= g.degree(w) for w in range(g.n))
    for u, v in g.edges():
        assert delete_edge(g, (u, v)).m == g.m - 1
        h, _ = contract_edge(g, (u, v))
        common = bin(g.masks[u] & g.masks[v]).count("1")
        assert h.n == g.n - 1 and h.m == g.m - 1 - common


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 6))
def test_subdivision_counts(n, k):
    rng = random.Random(n * 10 + k)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6])
    h, _ = subdivide(g, k)
    assert (h.n, h.m) == (n + (k - 1) * g.m, k * g.m)


def _random_op(g, rng):
    kinds = ["delete_vertex", "contract_vertex", "odot_vertex"]
    if g.m:
        kinds += ["delete_edge", "contract_edge"]
    kind = rng.choice(kinds)
    if kind in ("delete_edge", "contract_edge"):
        return OperationDescriptor(kind, edge=rng.choice(g.edges()))
    return OperationDescriptor(kind, vertex=rng.randrange(g.n))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=7), st.randoms(use_true_random=False))
def test_operations_commute_with_relabeling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    op = _random_op(g, rng)
    h, _ = apply_operation(g, op)
    if op.edge is not None:
        moved = OperationDescriptor(op.kind, edge=(perm[op.edge[0]], perm[op.edge[1]]))
    else:
        moved = OperationDescriptor(op.kind, vertex=perm[op.vertex])
    h2, _ = apply_operation(g.relabel(perm), moved)
    assert iso(h, h2)
    for out in (h, h2):
        for v in range(out.n):
            assert not out.has_edge(v, v)
            assert all(out.has_edge(w, v) for w in out.neighbors(v))
