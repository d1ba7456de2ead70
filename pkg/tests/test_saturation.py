import json

import pytest
from hypothesis import given, settings, strategies as st

from satedge.constructions import h1, turan_graph
from satedge.graph import build_graph, contains_clique
from satedge.saturation import (
    CliquePresentError,
    count_saturating,
    count_saturating_blowup,
    is_saturating,
)


def kpfree_graph_strategy(max_n=12, p_range=(3, 5)):
    @st.composite
    def graphs(draw):
        p = draw(st.integers(min_value=p_range[0], max_value=p_range[1]))
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        g = build_graph(n, [])
        for u, v in chosen:
            cand = g.with_edge(u, v)
            if not contains_clique(cand, p):
                g = cand
        return g, p

    return graphs()


def test_is_saturating_path():
    path = build_graph(3, [(0, 1), (1, 2)])
    assert is_saturating(path, 3, 0, 2)


def test_is_saturating_validates():
    path = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        is_saturating(path, 2, 0, 2)
    with pytest.raises(ValueError):
        is_saturating(path, 3, 0, 1)  # existing edge
    with pytest.raises(ValueError):
        is_saturating(path, 3, 0, 0)
    with pytest.raises(ValueError):
        is_saturating(path, 3, 0, 5)


def test_count_on_balanced_bipartite(k33):
    # adding any same-side pair creates a triangle through the other side
    report = count_saturating(k33, 3)
    assert report.total == 6
    # but never a K4
    assert count_saturating(k33, 4).total == 0


def test_count_on_prism(prism):
    assert count_saturating(prism, 4).total == 0
    assert count_saturating(prism, 4, edges=True).edges == ()


def test_count_rejects_hosts_with_clique(triangle):
    with pytest.raises(CliquePresentError):
        count_saturating(triangle, 3)


def test_edge_list_is_lexicographic(k33):
    report = count_saturating(k33, 3, edges=True)
    assert report.edges == tuple(sorted(report.edges))
    assert len(report.edges) == report.total


def test_report_json_round_trip(k33):
    data = json.loads(count_saturating(k33, 3, edges=True).to_json())
    assert data == {"p": 3, "n": 6, "total": 6, "edges": [[0, 1], [0, 2], [1, 2], [3, 4], [3, 5], [4, 5]]}
    assert "edges" not in json.loads(count_saturating(k33, 3).to_json())


def test_one_step_smaller_clique_freedom_gives_zero():
    # a K_{p-1}-free host can never gain a K_p from one added edge
    for n, p in [(6, 4), (9, 4), (9, 5), (12, 5)]:
        g = turan_graph(n, p - 2)
        assert count_saturating(g, p).total == 0


@settings(max_examples=100, deadline=None)
@given(kpfree_graph_strategy())
def test_count_matches_add_edge_oracle(gp):
    g, p = gp
    report = count_saturating(g, p, edges=True)
    oracle = [
        (u, v)
        for u, v in g.non_edges()
        if contains_clique(g.with_edge(u, v), p)
    ]
    assert list(report.edges) == oracle
    assert report.total == len(oracle)


def test_threads_match_single(h1_310):
    g = h1_310.graph
    one = count_saturating(g, 4, edges=True, threads=1)
    many = count_saturating(g, 4, edges=True, threads=4)
    assert one.total == many.total == 246
    assert one.edges == many.edges


def test_blowup_count_matches_brute_force():
    for p, x, y in [(3, 1, 0), (3, 1, 1), (3, 1, 2), (4, 1, 0)]:
        bu = h1(p, x, y)
        assert count_saturating_blowup(bu, p + 1).total == count_saturating(bu.graph, p + 1).total


def test_blowup_count_requires_matching_p(h1_310):
    with pytest.raises(ValueError):
        count_saturating_blowup(h1_310, 3)
