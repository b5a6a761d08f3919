import math

import networkx as nx
import pytest

from arrowkit.catalog import (
    ParseFailure,
    ScanRecord,
    divergence_set,
    enumerate_graphs_small,
    enumerate_up_to,
    read_graph6_lines,
    scan_corpus,
    scan_graph,
    summarize,
)
from arrowkit.graph import Graph, Pattern, UnsupportedSize, canonical_form, graham_graph, write_graph6

K3 = Pattern.of(3)
K3K2 = Pattern.of(3, 2)

# OEIS A000088
COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def automorphisms(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_and_orbit_identity(n):
    graphs = list(enumerate_graphs_small(n))
    assert len(graphs) == COUNTS[n]
    # each class contributes n!/|Aut| labelled graphs
    assert sum(math.factorial(n) // automorphisms(g) for g in graphs) == 2 ** (n * (n - 1) // 2)
    assert all(canonical_form(g) == g for g in graphs)
    keys = [(g.num_edges(), write_graph6(g)) for g in graphs]
    assert keys == sorted(keys)


def test_count_n7():
    assert sum(1 for _ in enumerate_graphs_small(7)) == 1044


def test_enumeration_cap():
    with pytest.raises(UnsupportedSize):
        list(enumerate_graphs_small(8))


def test_read_graph6_lines_reports_failures():
    items = list(read_graph6_lines(["D~{", "", "# comment", "D~", "E~~w\n"]))
    assert isinstance(items[1], ParseFailure) and items[1].line == 4
    assert [write_graph6(x) for x in items if not isinstance(x, ParseFailure)] == ["D~{", "E~~w"]


def test_scan_records():
    rec = scan_graph(Graph.complete(6), K3, K3K2)
    assert rec.arrows_target and rec.arrows_cotarget is False and rec.contains_K6
    assert rec.minimal_for_target and not rec.violation
    rec = scan_graph(graham_graph(), K3, K3K2)
    assert rec.arrows_target and rec.arrows_cotarget and not rec.contains_K6 and rec.omega == 5
    assert rec.canonical
    rec = scan_graph(Graph.complete(4), K3, K3K2)
    assert not rec.arrows_target and rec.arrows_cotarget is None


def test_scan_corpus_order_and_summary():
    src = ["E~~w", "bad", "D~{", "F~~~w"]
    recs = list(scan_corpus(read_graph6_lines(src), K3, K3K2))
    assert isinstance(recs[1], ParseFailure)
    assert [r.n for r in recs if isinstance(r, ScanRecord)] == [6, 5, 7]
    s = summarize(recs)
    assert (s.records, s.errors, s.arrows_target, s.violations) == (3, 1, 2, [])


def test_scan_parallel_matches_sequential():
    src = list(enumerate_graphs_small(5))
    one = [r.to_json() for r in scan_corpus(src, K3, K3K2)]
    two = [r.to_json() for r in scan_corpus(src, K3, K3K2, workers=2)]
    assert one == two


def test_divergence_up_to_6():
    res = divergence_set(enumerate_up_to(6), K3, K3K2)
    assert res.members == ["E~~w"]
    assert res.scanned == sum(COUNTS[n] for n in range(1, 7))
