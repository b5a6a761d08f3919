"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
Time limits are pinned below.
"""

import sys
import time
from contextlib import nullcontext

import pytest

from arrowkit.catalog import divergence_set, enumerate_graphs_small, enumerate_up_to, scan_corpus, summarize
from arrowkit.cnf import enumerate_sat, pattern_placements, to_cnf
from arrowkit.engine import ARROWS, NOT_ARROWS, arrows, find_mono, is_ramsey_minimal
from arrowkit.gadgets import (
    BUILTIN_NAMES,
    benign_flips,
    builtin_gadget,
    certify,
    lemma1_gadget_search,
    scenario_arithmetic,
    search_gadget,
)
from arrowkit.gadgets.search import SEARCH_NAMES, certify_search, lemma1_properties
from arrowkit.graph import RED, BLUE, Graph, Pattern, colour_class, find_clique, graham_graph, max_clique_size
from arrowkit.oracle import enumerate_colourings_oracle

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from conftest import random_graphs  # noqa: E402

K3 = Pattern.of(3)
K3K2 = Pattern.of(3, 2)

LIMITS = {
    "C1": 1.0,
    "C2": 1.0,
    "C3": 60.0,
    "C4": 600.0,
    "C5": 600.0,
    "C6_lemma1": 300.0,
    "C6_search": 60.0,
    "C8": 60.0,
    "C9": 900.0,
}


def report(capsys, tag: str, ok: bool, detail: str):
    ctx = capsys.disabled() if capsys is not None else nullcontext()
    with ctx:
        print(f"\n[{'PASS' if ok else 'FAIL'}] {tag}: {detail}")
    assert ok, detail


def corpus_c4():
    return [g for n in range(1, 7) for g in enumerate_graphs_small(n)] + random_graphs(7, 50, seed=7, p=0.7)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c1_ground_facts(capsys):
    k6, t6 = timed(lambda: arrows(Graph.complete(6), K3))
    k5, t5 = timed(lambda: arrows(Graph.complete(5), K3))
    w = k5.witness
    triangle_free = w is not None and all(find_clique(colour_class(w, c), 3) is None for c in (RED, BLUE))
    ok = k6.verdict == ARROWS and k5.verdict == NOT_ARROWS and triangle_free and max(t5, t6) < LIMITS["C1"]
    report(capsys, "C1 K6->K3, K5-/->K3 with triangle-free classes",
           ok, f"{k6.verdict}/{k5.verdict}, witness ok={triangle_free}, {t6:.3f}s/{t5:.3f}s < {LIMITS['C1']}s")


def test_c2_separating_instance(capsys):
    res, t = timed(lambda: arrows(Graph.complete(6), K3K2))
    valid = res.witness is not None and find_mono(res.witness, K3K2) is None
    ok = res.verdict == NOT_ARROWS and valid and t < LIMITS["C2"]
    report(capsys, "C2 K6 -/-> K3+K2", ok, f"{res.verdict}, witness valid={valid}, {t:.3f}s < {LIMITS['C2']}s")


def test_c3_graham_graph(capsys):
    g = graham_graph()

    def run():
        return max_clique_size(g), arrows(g, K3).verdict, arrows(g, K3K2).verdict

    (omega, a, b), t = timed(run)
    contrapositive = not (a == ARROWS and b == NOT_ARROWS) or omega >= 6
    ok = omega == 5 and a == ARROWS and b == ARROWS and contrapositive and t < LIMITS["C3"]
    report(capsys, "C3 K8-C5: omega 5, ->K3, ->K3+K2", ok, f"omega={omega}, {a}, {b}, {t:.2f}s < {LIMITS['C3']}s")


def test_c4_oracle_equivalence(capsys):
    def run():
        bad = []
        graphs = corpus_c4()
        for g in graphs:
            for p in (K3, K3K2):
                if arrows(g, p).verdict != enumerate_colourings_oracle(g, p).verdict:
                    bad.append((g, p))
        return len(graphs), bad

    (count, bad), t = timed(run)
    ok = not bad and t < LIMITS["C4"]
    report(capsys, "C4 engine == oracle", ok, f"{count} graphs x 2 patterns, {len(bad)} disagreements, {t:.1f}s < {LIMITS['C4']}s")


def test_c5_cnf_cross_check(capsys):
    def run():
        bad = checked = 0
        for g in corpus_c4():
            if g.num_edges() > 18:
                continue
            for p in (K3, K3K2):
                f = to_cnf(g, p)
                checked += 1
                if len(f.clauses) != 2 * len(pattern_placements(g, p)):
                    bad += 1
                elif (enumerate_sat(f) is None) != arrows(g, p).arrows:
                    bad += 1
        return checked, bad

    (checked, bad), t = timed(run)
    ok = bad == 0 and t < LIMITS["C5"]
    report(capsys, "C5 DIMACS satisfiability == engine", ok, f"{checked} formulas, {bad} disagreements, {t:.1f}s")


def test_c6_gadget_certifications(capsys):
    lines = []
    ok = True
    for n in (4, 5):
        (spec, t) = timed(lambda: lemma1_gadget_search(n))
        props = lemma1_properties(spec)
        rep = certify(spec, n)
        good = all(props.values()) and rep.passed and t < LIMITS["C6_lemma1"]
        ok &= good
        lines.append(f"lemma1 n={n} {'ok' if good else 'BAD'} ({t:.2f}s)")
    for name in ("lemma3_stage1", "lemma3_stage2"):
        for n in (4, 5):
            good = certify(builtin_gadget(name, n), n).passed
            ok &= good
            lines.append(f"{name} n={n} {'ok' if good else 'BAD'}")
    for variant in ("disjoint", "intersect"):
        for n in (4, 5):
            good = certify(builtin_gadget("theorem1_final", n, variant), n).passed
            ok &= good
            lines.append(f"theorem1_final[{variant}] n={n} {'ok' if good else 'BAD'}")
    for name in SEARCH_NAMES:
        spec, t = timed(lambda: search_gadget(name))
        rep, ext = certify_search(spec)
        good = rep.passed and (ext is None or ext.passed) and t < LIMITS["C6_search"]
        ok &= good
        lines.append(f"{name} {'ok' if good else 'BAD'} ({t:.2f}s)")
    report(capsys, "C6 gadget certifications", ok, "; ".join(lines))


def test_c7_mutation_sensitivity(capsys):
    whitelist: set = set()
    spec = builtin_gadget("theorem1_final", 5, "disjoint")
    survivors = set(benign_flips(spec, 5)) - whitelist
    ok = not survivors
    report(capsys, "C7 theorem1_final(n=5) mutation sensitivity", ok,
           f"{len(spec.force_slots())} Force slots flipped, {len(survivors)} survived, whitelist empty")


def test_c8_minimality(capsys):
    def run():
        return is_ramsey_minimal(Graph.complete(6), K3).is_minimal, is_ramsey_minimal(Graph.complete(7), K3).is_minimal

    (k6, k7), t = timed(run)
    ok = k6 and not k7 and t < LIMITS["C8"]
    report(capsys, "C8 minimality", ok, f"K6 minimal={k6}, K7 minimal={k7}, {t:.2f}s < {LIMITS['C8']}s")


def test_c9_divergence(capsys):
    def run():
        div = divergence_set(enumerate_up_to(7), K3, K3K2)
        summary = summarize(scan_corpus(enumerate_up_to(7), K3, K3K2, minimality=False))
        return div, summary

    (div, summary), t = timed(run)
    ok = div.members == ["E~~w"] and not summary.violations and t < LIMITS["C9"]
    report(capsys, "C9 divergence set over n<=7", ok,
           f"D = {div.members} (K6 = E~~w), {summary.records} scanned, {len(summary.violations)} violations, {t:.1f}s")


def test_c10_scenario(capsys):
    reps = {n: scenario_arithmetic(n) for n in range(4, 11)}
    checks = sum(len(i.checks) for r in reps.values() for i in r.invocations)
    ok = all(r.passed for r in reps.values())
    report(capsys, "C10 scenario arithmetic n=4..10", ok, f"{checks} instantiated inequalities, all true={ok}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_c"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
