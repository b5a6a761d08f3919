import itertools

import pytest

from arrowkit.engine import (
    ARROWS,
    NOT_ARROWS,
    arrows,
    arrows_pair,
    find_mono,
    is_ramsey_minimal,
    placement_edge_sets,
    vertex_placements,
)
from arrowkit.graph import BLUE, RED, Colouring, Graph, Pattern, graham_graph
from arrowkit.oracle import brute_placement_masks, enumerate_colourings_oracle

from conftest import random_graphs

K3 = Pattern.of(3)
K3K2 = Pattern.of(3, 2)


def brute_pair(g: Graph, pr: Pattern, pb: Pattern):
    """Lex-first colouring with no red pr and no blue pb, by plain enumeration."""
    for cols in itertools.product((RED, BLUE), repeat=g.num_edges()):
        c = Colouring(g, cols)
        if find_mono(c, pr, RED) is None and find_mono(c, pb, BLUE) is None:
            return c
    return None


def assert_valid_witness(res, g, pr, pb=None):
    pb = pb or pr
    assert res.verdict == NOT_ARROWS
    w = res.witness
    assert w.graph == g and w.is_total
    assert find_mono(w, pr, RED) is None
    assert find_mono(w, pb, BLUE) is None


def test_ground_facts():
    assert arrows(Graph.complete(6), K3).verdict == ARROWS
    res = arrows(Graph.complete(5), K3)
    assert_valid_witness(res, Graph.complete(5), K3)
    assert arrows(Graph.complete(6), K3K2).verdict == NOT_ARROWS
    assert arrows(Graph.complete(7), K3K2).verdict == ARROWS


def test_k6_k3k2_lex_first_witness():
    g = Graph.complete(6)
    res = arrows(g, K3K2)
    red = [e for e, c in zip(g.edges(), res.witness.colours) if c is RED]
    assert red == [e for e in g.edges() if e[0] in (0, 1)]
    assert res.witness == enumerate_colourings_oracle(g, K3K2).witness


def test_classical_ramsey_numbers():
    assert arrows_pair(Graph.complete(5), K3, K3).verdict == NOT_ARROWS
    assert arrows_pair(Graph.complete(8), K3, Pattern.of(4)).verdict == NOT_ARROWS
    assert arrows_pair(Graph.complete(9), K3, Pattern.of(4)).verdict == ARROWS
    # R(2, k) = k
    assert arrows_pair(Graph.complete(7), Pattern.of(2), Pattern.of(7)).verdict == ARROWS
    assert arrows_pair(Graph.complete(6), Pattern.of(2), Pattern.of(7)).verdict == NOT_ARROWS


def test_asymmetric_pair_matches_brute():
    for g in random_graphs(5, 6, seed=9, p=0.8) + [Graph.complete(5)]:
        res = arrows_pair(g, K3, Pattern.of(2, 2))
        expect = brute_pair(g, K3, Pattern.of(2, 2))
        assert (res.witness is None) == (expect is None)
        if expect is not None:
            assert res.witness == expect


def test_graham_graph():
    g = graham_graph()
    assert arrows(g, K3).verdict == ARROWS
    assert arrows(g, K3K2).verdict == ARROWS


def test_pattern_larger_than_graph():
    g = Graph.complete(4)
    res = arrows(g, Pattern.of(5))
    assert res.verdict == NOT_ARROWS and res.witness.is_total
    res = arrows(Graph.empty(3), K3)
    assert res.verdict == NOT_ARROWS and res.witness.colours == ()


def test_oracle_equivalence_small(small_corpus):
    for g in small_corpus:
        for p in (K3, K3K2, Pattern.of(2, 2)):
            ours = arrows(g, p)
            ref = enumerate_colourings_oracle(g, p)
            assert ours.verdict == ref.verdict, (g, p)
            assert ours.witness == ref.witness, (g, p)


def test_placements_match_brute(small_corpus):
    for g in small_corpus[-40:]:
        for p in (K3, K3K2, Pattern.of(2, 2, 2)):
            m = g.num_edges()
            ours = sorted(sum(1 << (m - 1 - e) for e in pl) for pl in placement_edge_sets(g, p))
            assert ours == brute_placement_masks(g, p)


def test_equal_size_parts_deduplicated():
    # K4 has 3 perfect matchings
    assert len(vertex_placements(Graph.complete(4), Pattern.of(2, 2))) == 3
    # K6: 10 splits into two triangles
    assert len(vertex_placements(Graph.complete(6), Pattern.of(3, 3))) == 10


@pytest.mark.parametrize("g", random_graphs(7, 12, seed=21, p=0.7) + [Graph.complete(6), Graph.complete(7)])
def test_on_the_fly_mode_agrees(g):
    for p in (K3, K3K2):
        normal = arrows(g, p)
        forced = arrows(g, p, placement_limit=0)
        assert forced.stats.mode == "on-the-fly"
        assert forced.verdict == normal.verdict
        assert forced.witness == normal.witness


def test_parallel_agrees():
    for g in [Graph.complete(5), Graph.complete(6), graham_graph()]:
        for p in (K3, K3K2):
            one = arrows(g, p)
            two = arrows(g, p, workers=2)
            assert one.verdict == two.verdict
            assert one.witness == two.witness


def test_monotone_under_edge_addition():
    for g in random_graphs(7, 15, seed=33, p=0.75):
        if arrows(g, K3).arrows:
            for u, v in itertools.combinations(range(7), 2):
                if not g.has_edge(u, v):
                    assert arrows(g.add_edge(u, v), K3).arrows
                    break


def test_colour_swap_symmetry():
    for g in random_graphs(6, 10, seed=44, p=0.7):
        res = arrows(g, K3K2)
        if res.witness is not None:
            assert find_mono(res.witness.swapped(), K3K2) is None


def test_find_mono():
    g = Graph.complete(4)
    c = Colouring.from_map(g, {(0, 1): RED, (0, 2): RED, (1, 2): RED}, default=BLUE)
    colour, parts = find_mono(c, K3)
    assert colour is RED and parts == [frozenset({0, 1, 2})]
    assert find_mono(c, K3, BLUE) is None
    assert find_mono(c, Pattern.of(2, 2), BLUE) is None


def test_minimality():
    rep = is_ramsey_minimal(Graph.complete(6), K3)
    assert rep.is_ramsey and rep.is_minimal and len(rep.critical_edges) == 15
    rep = is_ramsey_minimal(Graph.complete(7), K3)
    assert rep.is_ramsey and not rep.is_minimal and rep.critical_edges == []
    padded = Graph(7, Graph.complete(6).adj + (0,))
    rep = is_ramsey_minimal(padded, K3)
    assert rep.is_ramsey and not rep.is_minimal and rep.isolated_vertices == [6]
    rep = is_ramsey_minimal(Graph.complete(5), K3)
    assert not rep.is_ramsey and not rep.is_minimal
