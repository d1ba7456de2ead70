import json
from fractions import Fraction
from itertools import combinations

import pytest

from satedge.constructions import turan_graph
from satedge.graph import build_graph, induced_edges
from satedge.packing import (
    BudgetExceededError,
    analyze,
    best_r_star,
    certify_remainder_maximal,
    check_switch_inequality,
    ell_split,
    make_packing,
    max_packing,
    max_remainder_packing,
    packing_from_json,
    refine_packing,
    switch,
)
from satedge.saturation import CliquePresentError, count_saturating
from satedge.verify import random_kpfree_graph


def complete_graph(n):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_max_packing_complete_graph():
    pk = max_packing(complete_graph(6), 3)
    assert pk.size == 2
    assert pk.certified
    assert pk.cliques == ((0, 1, 2), (3, 4, 5))
    assert pk.remainder == 0


def test_max_packing_triangle_free(c5):
    pk = max_packing(c5, 3)
    assert pk.size == 0
    assert pk.certified
    assert pk.remainder == c5.vertices_mask()


def test_max_packing_prism(prism):
    pk = max_packing(prism, 3)
    assert pk.size == 2
    assert pk.cliques == ((0, 1, 2), (3, 4, 5))


def test_max_packing_h1(h1_310_packing):
    pk = h1_310_packing
    assert pk.size == 4
    assert pk.density == Fraction(2, 33)
    assert pk.certified


def test_max_packing_budget_error(h1_310):
    with pytest.raises(BudgetExceededError):
        max_packing(h1_310.graph, 3, budget=10)


def test_max_packing_is_lex_least():
    # two optimal packings exist; the lowest sorted family wins
    g = build_graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (4, 5), (4, 6), (5, 6)])
    pk = max_packing(g, 3)
    assert pk.cliques == ((0, 1, 2), (4, 5, 6))


def test_make_packing_validation(prism):
    with pytest.raises(ValueError):
        make_packing(prism, 3, [(0, 1, 3)])  # not a clique
    with pytest.raises(ValueError):
        make_packing(prism, 3, [(0, 1, 2), (2, 3, 4)])  # overlap
    with pytest.raises(ValueError):
        make_packing(prism, 3, [(0, 1)])  # wrong size
    with pytest.raises(ValueError):
        make_packing(prism, 3, [(0, 1, 9)])  # out of range


def test_packing_json_round_trip(prism):
    pk = max_packing(prism, 3)
    back = packing_from_json(prism, pk.to_json())
    assert back.cliques == pk.cliques
    assert back.remainder == pk.remainder
    assert back.certified
    broken = json.loads(pk.to_json())
    broken["remainder"] = [0]
    with pytest.raises(ValueError):
        packing_from_json(prism, json.dumps(broken))


def test_switch_vertex_swap(h1_310, h1_310_packing):
    pk = h1_310_packing
    # swap the packed second-part vertex 4 for its unpacked twin 8
    moved = switch(pk, 0, (4,), (8,))
    assert moved.size == pk.size
    assert (0, 8, 20) in moved.cliques
    assert moved.remainder != pk.remainder


def test_switch_rejects_bad_moves(h1_310_packing):
    pk = h1_310_packing
    with pytest.raises(ValueError):
        switch(pk, 0, (4,), (5,))  # 5 is inside another packed clique
    with pytest.raises(ValueError):
        switch(pk, 0, (4,), (36,))  # result is not a clique
    with pytest.raises(ValueError):
        switch(pk, 0, (4,), (8, 9))  # size mismatch


def test_empty_switch_is_identity(h1_310_packing):
    pk = h1_310_packing
    same = switch(pk, 0, (), ())
    assert same.cliques == pk.cliques
    lhs, rhs, holds = check_switch_inequality(pk, 0, (), ())
    assert lhs == rhs and holds


def test_refine_packing_never_decreases_remainder_edges():
    for seed in range(12):
        g = random_kpfree_graph(14, 4, seed=seed)
        pk = max_packing(g, 3)
        before = induced_edges(g, pk.remainder)
        refined = refine_packing(pk)
        after = induced_edges(g, refined.remainder)
        assert refined.size == pk.size
        assert after >= before


def test_refine_packing_fixed_point():
    for seed in range(6):
        g = random_kpfree_graph(12, 4, seed=seed)
        refined = refine_packing(max_packing(g, 3))
        again = refine_packing(refined)
        assert again.cliques == refined.cliques


def test_ell_split_sums_to_count(h1_310, h1_310_packing):
    l1, l2 = ell_split(h1_310_packing)
    assert (l1, l2) == (114, 132)
    assert l1 + l2 == count_saturating(h1_310.graph, 4).total


def test_ell_split_extremal_bipartite():
    g = turan_graph(6, 2)
    pk = max_packing(g, 3)  # empty: the host is triangle-free
    assert pk.size == 0
    assert ell_split(pk) == (0, 0)


def test_analyze_identities_random_suite():
    cases = [(n, 3) for n in (8, 12, 16, 20)] + [(14, 4), (25, 4), (18, 5)]
    for n, p in cases:
        g = random_kpfree_graph(n, p + 1, seed=n * 31 + p)
        pk = refine_packing(max_packing(g, p))
        total = count_saturating(g, p + 1).total
        for index in range(pk.size):
            an = analyze(pk, index)
            assert sum(an.z) == 1 - p * an.r
            assert an.Z[p] == 0
            assert an.ell1 + an.ell2 == total
            for a in an.A:
                assert induced_edges(g, a) == 0


def test_analyze_n40_sparse():
    g = random_kpfree_graph(40, 4, seed=5, target_edges=70)
    pk = refine_packing(max_packing(g, 3))
    assert pk.size > 0
    for index in range(pk.size):
        analyze(pk, index)


def test_analyze_rejects_clique_host():
    g = complete_graph(4)
    pk = make_packing(g, 3, [(0, 1, 2)], certified=False)
    with pytest.raises(CliquePresentError):
        analyze(pk, 0)


def test_analyze_isolated_remainder():
    # one triangle plus isolated vertices: everything else has zero neighbors
    g = build_graph(7, [(0, 1), (0, 2), (1, 2)])
    pk = max_packing(g, 3)
    an = analyze(pk, 0)
    assert an.z[0] == Fraction(4, 7)
    assert sum(an.z) == 1 - 3 * Fraction(1, 7)
    assert all(a == 0 for a in an.A)


def test_best_r_star_on_h1(h1_310, h1_310_packing):
    index, value = best_r_star(h1_310_packing)
    assert index == 0
    assert value == 78


def test_best_r_star_prism_meets_vacuous_bounds(prism):
    # 9 edges is exactly the extremal count at n=6, so the hypothesis holds
    # and the empty remainder satisfies both bounds trivially
    index, value = best_r_star(max_packing(prism, 3))
    assert (index, value) == (0, 0)


def test_best_r_star_hypotheses(h1_310, h1_310_packing, prism):
    pk = max_packing(prism.without_edge(0, 3), 3)
    with pytest.raises(ValueError):
        best_r_star(pk)  # 8 edges: one short of the extremal count
    uncertified = make_packing(h1_310.graph, 3, h1_310_packing.cliques, certified=False)
    with pytest.raises(ValueError):
        best_r_star(uncertified)
    empty = max_packing(turan_graph(6, 2), 3)
    with pytest.raises(ValueError):
        best_r_star(empty)


def test_switch_inequality_on_certified_instances():
    held = 0
    for seed in range(25):
        n = 10 + seed % 5
        g = random_kpfree_graph(n, 4, seed=seed)
        pk = refine_packing(max_packing(g, 3))
        ok, best = certify_remainder_maximal(pk)
        cert = pk if ok else max_remainder_packing(g, 3)
        assert induced_edges(g, cert.remainder) == best
        for index, clique in enumerate(cert.cliques):
            for size in (1, 2, 3):
                for c_out in combinations(clique, size):
                    kept = set(clique) - set(c_out)
                    cand = cert.remainder
                    for k in kept:
                        cand &= g.adj[k]
                    for c_in in combinations(sorted(v for v in range(n) if cand >> v & 1), size):
                        if all(g.has_edge(u, v) for u, v in combinations(c_in, 2)):
                            lhs, rhs, holds = check_switch_inequality(cert, index, c_out, c_in)
                            assert holds, (seed, index, c_out, c_in, lhs, rhs)
                            held += 1
    assert held > 50


def test_max_remainder_packing_dominates_refinement():
    for seed in range(10):
        g = random_kpfree_graph(13, 4, seed=100 + seed)
        local = refine_packing(max_packing(g, 3))
        best = max_remainder_packing(g, 3)
        assert best.size == local.size
        assert induced_edges(g, best.remainder) >= induced_edges(g, local.remainder)


def test_certify_remainder_maximal_rejects_non_maximum(prism):
    sub = make_packing(prism, 3, [(0, 1, 2)])
    with pytest.raises(ValueError):
        certify_remainder_maximal(sub)


def test_density_and_masks(h1_310_packing):
    pk = h1_310_packing
    packed = pk.packed_mask
    assert packed.bit_count() == 12
    assert packed & pk.remainder == 0
    assert packed | pk.remainder == pk.host.vertices_mask()
