from __future__ import annotations

import pytest

from colorfix.construct import complete_graph, cycle_graph, grotzsch_graph, odd_wheel
from colorfix.coloring import chromatic_number
from colorfix.criticality import check_criticality, is_k_chromatic, is_k_critical, subcriticals
from colorfix.graph import Graph, delete_edge
from oracles import naive_count, naive_is_critical


def test_is_k_chromatic(k4, w5):
    assert is_k_chromatic(k4, 4)
    assert not is_k_chromatic(k4, 3)
    assert is_k_chromatic(w5, 4)


def test_w5_certificate_against_exhaustive_edge_deletions(w5):
    cert = is_k_critical(w5, 4)
    assert cert is not None and len(cert.per_edge) == 10
    assert naive_count(w5, 3) == 0
    for u, v in w5.edges():
        assert naive_count(delete_edge(w5, (u, v)), 3) > 0


def test_criticality_examples(k4, c5):
    assert is_k_critical(k4, 4) is not None
    assert is_k_critical(c5, 3) is not None
    assert is_k_critical(cycle_graph(6), 3) is None


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_complete_graphs_are_critical(k):
    cert = is_k_critical(complete_graph(k), k)
    assert cert is not None and cert.replay(complete_graph(k))


def test_not_critical_reports_counterexample():
    # K4 with a pendant vertex: deleting the pendant edge keeps chi = 4
    g = Graph.from_edges(5, complete_graph(4).edges() + [(3, 4)])
    check = check_criticality(g, 4)
    assert not check
    assert check.reason
    # a chord on the Groetzsch graph's outer 5-cycle adds triangles but no K4
    thick = grotzsch_graph().add_edge(0, 2)
    check = check_criticality(thick, 4)
    assert not check and check.counterexample is not None
    assert chromatic_number(delete_edge(thick, check.counterexample))[0] == 4


def test_disconnected_rejected():
    two_k4 = Graph.from_edges(8, complete_graph(4).edges() + [(a + 4, b + 4) for a, b in complete_graph(4).edges()])
    assert check_criticality(two_k4, 4).reason == "disconnected"


def test_grotzsch_is_4_critical():
    cert = is_k_critical(grotzsch_graph(), 4)
    assert cert is not None and cert.replay(grotzsch_graph())


def test_subcriticals(k4, c5):
    pairs = list(subcriticals(k4))
    assert len(pairs) == 6 and all(chromatic_number(h)[0] == 3 for _, h in pairs)
    pairs = list(subcriticals(c5))
    assert len(pairs) == 5 and all(h.num_edges == 4 and chromatic_number(h)[0] == 2 for _, h in pairs)
    pairs = list(subcriticals(complete_graph(5)))
    assert len(pairs) == 10 and all(chromatic_number(h)[0] == 4 for _, h in pairs)
    assert [e for e, _ in pairs] == complete_graph(5).edges()


def test_criticality_matches_exhaustive_oracle(corpus7):
    for g in corpus7:
        if g.n < 3 or g.min_degree() < 2:
            continue
        for k in (3, 4, 5):
            cert = is_k_critical(g, k)
            assert (cert is not None) == naive_is_critical(g, k), g
            if cert is not None:
                assert cert.replay(g)
                assert g.min_degree() >= k - 1
