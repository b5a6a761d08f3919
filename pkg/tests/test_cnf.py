import pytest

from arrowkit.cnf import (
    DimacsError,
    decode_model,
    enumerate_sat,
    parse_dimacs,
    pattern_placements,
    to_cnf,
    write_dimacs,
)
from arrowkit.engine import arrows, find_mono
from arrowkit.graph import Graph, Pattern

K3 = Pattern.of(3)
K3K2 = Pattern.of(3, 2)


def test_k5_k3_formula_shape():
    g = Graph.complete(5)
    f = to_cnf(g, K3)
    assert f.num_vars == 10
    assert len(f.clauses) == 2 * 10
    assert len(pattern_placements(g, K3)) == 10
    text = write_dimacs(f)
    assert "p cnf 10 20" in text
    assert "c edge 1 = (0,1)" in text


def test_dimacs_roundtrip():
    g = Graph.complete(6)
    f = to_cnf(g, K3K2)
    back = parse_dimacs(write_dimacs(f))
    assert back.num_vars == f.num_vars
    assert back.clauses == f.clauses
    assert back.edges == g.edges()


def test_each_placement_gives_red_and_blue_clause():
    g = Graph.complete(5)
    f = to_cnf(g, K3)
    for neg, pos in zip(f.clauses[::2], f.clauses[1::2]):
        assert all(lit < 0 for lit in neg)
        assert pos == [-lit for lit in neg]


def test_satisfiability_matches_engine(small_corpus):
    for g in small_corpus:
        if g.num_edges() > 15:
            continue
        for p in (K3, K3K2):
            f = to_cnf(g, p)
            model = enumerate_sat(f)
            res = arrows(g, p)
            assert (model is None) == res.arrows
            if model is not None:
                w = decode_model(g, model)
                assert find_mono(w, p) is None
                # first model in Red-first order is the engine's lex-first witness
                assert w == res.witness


@pytest.mark.parametrize(
    "text",
    [
        "1 2 0\n",
        "p cnf 2 1\n1 3 0\n",
        "p cnf 2 2\n1 2 0\n",
        "p cnf 2 1\n1 2\n",
        "p dnf 2 1\n1 0\n",
        "p cnf 2 1\n1 x 0\n",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)
