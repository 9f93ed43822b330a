from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorfix.canon import are_isomorphic, canonical_form, canonical_graph6
from colorfix.construct import build_chain, complete_bipartite, complete_graph, cycle_graph, petersen_graph
from colorfix.graph import Graph, GraphError, to_graph6
from colorfix.harness import enumerate_connected_graphs
from oracles import naive_connected_classes
from strategies import graphs


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_canonical_form_is_relabelling_invariant(data):
    g = data.draw(graphs(max_n=10))
    order = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(list(order))) == canonical_form(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_canonical_form_is_isomorphic_copy(g):
    c = canonical_form(g)
    assert sorted(c.degrees()) == sorted(g.degrees()) and c.num_edges == g.num_edges
    assert canonical_form(c) == c


def test_brute_force_canonical_agreement_small():
    # every labelled graph on 5 vertices, grouped by the minimum over all 120 relabellings
    n = 5
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    perms = list(permutations(range(n)))
    brute: dict[str, set[str]] = {}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        key = min(to_graph6(g.relabel(list(p))) for p in perms)
        brute.setdefault(key, set()).add(canonical_graph6(g))
    assert len(brute) == 34  # graphs on 5 vertices
    assert all(len(v) == 1 for v in brute.values())


@pytest.mark.parametrize(
    "g",
    [complete_graph(9), Graph.empty(9), petersen_graph(), complete_bipartite(4, 5), cycle_graph(9), build_chain((3, 3, 3)).graph],
    ids=["K9", "empty9", "petersen", "K45", "C9", "chain333"],
)
def test_symmetric_graphs_canonicalise(g):
    shifted = g.relabel(list(range(1, g.n)) + [0])
    assert canonical_form(shifted) == canonical_form(g)


def test_are_isomorphic():
    assert are_isomorphic(cycle_graph(6), cycle_graph(6).relabel([3, 1, 5, 0, 2, 4]))
    assert not are_isomorphic(cycle_graph(6), Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumeration_counts(n, count):
    graphs_n = list(enumerate_connected_graphs(n))
    assert len(graphs_n) == count
    assert len(naive_connected_classes(n)) == count


def test_enumeration_matches_naive_oracle_up_to_seven():
    for n in range(1, 8):
        mine = [to_graph6(g) for g in enumerate_connected_graphs(n)]
        assert mine == sorted(mine)
        oracle = sorted(canonical_graph6(g) for g in naive_connected_classes(n))
        assert mine == oracle


def test_enumeration_representatives_are_canonical():
    for g in enumerate_connected_graphs(6):
        assert canonical_form(g) == g


def test_enumeration_cap():
    with pytest.raises(GraphError, match="graph6"):
        list(enumerate_connected_graphs(10))
    with pytest.raises(GraphError):
        list(enumerate_connected_graphs(0))
