from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorfix.coloring import chromatic_number, enumerate_colorings
from colorfix.construct import build_chain, complete_graph, cycle_graph, double_wheel, grotzsch_graph, odd_wheel, path_graph
from colorfix.graph import Graph, GraphError, delete_edge, is_cycle_graph
from colorfix.identity import (
    cycle_separates,
    identity_partition,
    is_color_fixed_by_odd_cycle,
    is_color_identical_pair,
    semantically_fixed_vertices,
    separating_coloring,
    shared_cycle_pair,
)
from oracles import naive_identical, naive_identity_classes, naive_semantically_fixed, proper_assignments, to_nx
from strategies import graphs

K4_MINUS_EDGE = delete_edge(complete_graph(4), (2, 3))
# two K4 - e blocks glued at vertex 3: u=0, mid=3, v=6 with edge pairs {1,2} and {4,5}
GLUED_K4E_CHAIN = Graph.from_edges(
    7,
    [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)],
)


def test_identical_pair_examples():
    assert naive_identical(K4_MINUS_EDGE, 2, 3)
    assert is_color_identical_pair(K4_MINUS_EDGE, 2, 3)
    assert is_color_identical_pair(double_wheel(5), 0, 1)
    assert is_color_identical_pair(path_graph(3), 0, 2)


def test_c5_pairs_are_separable():
    c5 = cycle_graph(5)
    for u in range(5):
        for v in range(u + 1, 5):
            assert not is_color_identical_pair(c5, u, v)
            if not c5.has_edge(u, v):
                split = separating_coloring(c5, u, v)
                assert split.is_proper(c5) and split.num_colors == 3
                assert split.colors[u] != split.colors[v]


def test_adjacent_pairs_never_identical(k4):
    assert not is_color_identical_pair(k4, 0, 1)


def test_pair_precondition():
    with pytest.raises(GraphError):
        is_color_identical_pair(path_graph(3), 1, 1)


def test_partition_examples(k4):
    part = identity_partition(K4_MINUS_EDGE)
    assert part.chi == 3
    assert sorted(part.classes) == [(0,), (1,), (2, 3)]
    assert sorted(map(list, part.classes)) == sorted(naive_identity_classes(K4_MINUS_EDGE))
    assert identity_partition(k4).classes == ((0,), (1,), (2,), (3,))


def test_glued_k4e_chain_partition():
    part = identity_partition(GLUED_K4E_CHAIN)
    assert part.chi == 3
    assert part.class_of(0) == (0, 3, 6)
    assert sorted(map(list, part.classes)) == sorted(naive_identity_classes(GLUED_K4E_CHAIN))
    assert sorted(part.identical_pairs()) == [(0, 3), (0, 6), (3, 6)]


def test_partition_matches_exhaustive_oracle(corpus7):
    for g in corpus7:
        if g.n > 6:
            continue
        part = identity_partition(g)
        assert sorted(map(list, part.classes)) == sorted(naive_identity_classes(g)), g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_partition_agrees_with_pairwise_queries(g):
    part = identity_partition(g)
    assert sorted(v for c in part.classes for v in c) == list(range(g.n))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            same = part.class_of(u) == part.class_of(v)
            assert same == is_color_identical_pair(g, u, v)
            if same:
                assert not g.has_edge(u, v)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_partition_permutation_invariant(data):
    g = data.draw(graphs(max_n=7))
    order = data.draw(st.permutations(list(range(g.n))))
    h = g.relabel(list(order))
    # h's vertex i is g's vertex order[i]
    mapped = sorted(tuple(sorted(order.index(v) for v in cls)) for cls in identity_partition(g).classes)
    assert mapped == sorted(identity_partition(h).classes)


def test_fixed_by_odd_cycle_examples(w5, k4):
    assert sorted(is_color_fixed_by_odd_cycle(w5, 0)) == [1, 2, 3, 4, 5]
    assert sorted(is_color_fixed_by_odd_cycle(k4, 2)) == [0, 1, 3]
    grotzsch = grotzsch_graph()
    for v in range(grotzsch.n):
        assert nx.is_bipartite(to_nx(grotzsch).subgraph(grotzsch.neighbors(v)))
        assert is_color_fixed_by_odd_cycle(grotzsch, v) is None


def test_odd_cycle_fixation_forces_fourth_colour(corpus7):
    instances = [g for g in corpus7 if chromatic_number(g)[0] == 4] + [build_chain((3, 3)).graph]
    assert len(instances) > 50
    for g in instances:
        colorings = list(enumerate_colorings(g, 4))
        for v in range(g.n):
            cycle = is_color_fixed_by_odd_cycle(g, v)
            if cycle is None:
                continue
            for col in colorings:
                around = {col.colors[c] for c in cycle}
                assert len(around) == 3 and col.colors[v] not in around


def test_shared_cycle_pair_examples():
    assert sorted(shared_cycle_pair(double_wheel(5), 0, 1)) == [2, 3, 4, 5, 6]
    k5e = delete_edge(complete_graph(5), (3, 4))
    assert sorted(shared_cycle_pair(k5e, 3, 4)) == [0, 1, 2]
    c6_pendants = Graph.from_edges(8, cycle_graph(6).edges() + [(0, 6), (3, 7)])
    assert shared_cycle_pair(c6_pendants, 6, 7) is None


def test_cycle_separates_examples():
    chain = build_chain((3,))
    assert cycle_separates(chain.graph, chain.cycles[0], 0, 1)
    assert cycle_separates(double_wheel(5), [2, 3, 4, 5, 6], 0, 1)
    # triangle 0-1-2, u=3 and v=4 adjacent to each other and to vertex 0
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4), (0, 3), (0, 4)])
    assert not cycle_separates(g, [0, 1, 2], 3, 4)


def test_cycle_separates_preconditions():
    g = double_wheel(5)
    with pytest.raises(GraphError, match="induce a cycle"):
        cycle_separates(g, [2, 3, 4], 0, 1)
    with pytest.raises(GraphError, match="outside the cycle"):
        cycle_separates(g, [2, 3, 4, 5, 6], 2, 1)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9, min_n=5))
def test_cycle_separation_symmetric(g):
    for u in range(g.n):
        cycle = is_color_fixed_by_odd_cycle(g, u)
        if cycle is None or is_cycle_graph(g.induced(cycle)) is None:
            continue
        others = [w for w in range(g.n) if w not in cycle]
        for a in others:
            for b in others:
                if a < b:
                    assert cycle_separates(g, cycle, a, b) == cycle_separates(g, cycle, b, a)


def test_semantic_fixation_examples(w5, k4):
    assert semantically_fixed_vertices(w5) == [0]
    assert semantically_fixed_vertices(k4) == [0, 1, 2, 3]


def test_semantic_fixation_matches_exhaustive_oracle(corpus7):
    checked = 0
    for g in corpus7:
        if 3 <= g.n <= 7 and chromatic_number(g)[0] >= 3:
            assert semantically_fixed_vertices(g) == naive_semantically_fixed(g), g
            checked += 1
    assert checked > 500


def test_semantic_and_syntactic_kept_apart():
    # hub of W5 with a pendant: still sees an odd cycle, but the pendant may share its colour
    g = Graph.from_edges(7, odd_wheel(5)[0].edges() + [(1, 6)])
    assert is_color_fixed_by_odd_cycle(g, 0) is not None
    assert 0 not in semantically_fixed_vertices(g)
    rows = proper_assignments(g, 4)
    assert np.any(rows[:, 0] == rows[:, 6])
