"""Brute-force arrowing oracle: every colouring, every placement, no search.

Kept deliberately independent of the engine: placements come from plain
``itertools.combinations`` over vertex sets and colourings are enumerated as
integers with numpy.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .engine import ARROWS, NOT_ARROWS, ArrowResult, SearchStats
from .graph import BLUE, RED, Colouring, Graph, Pattern, UnsupportedSize

ORACLE_MAX_EDGES = 24
_CHUNK = 1 << 20


def _brute_placements(g: Graph, p: Pattern) -> set[frozenset]:
    edges = g.edges()
    idx = {e: i for i, e in enumerate(edges)}
    found: set[frozenset] = set()

    def rec(avail: tuple[int, ...], sizes: tuple[int, ...], acc: list[frozenset]):
        if not sizes:
            found.add(frozenset().union(*acc))
            return
        for vs in combinations(avail, sizes[0]):
            pairs = list(combinations(vs, 2))
            if all(g.has_edge(u, v) for u, v in pairs):
                rest = tuple(v for v in avail if v not in vs)
                rec(rest, sizes[1:], acc + [frozenset(idx[e] for e in pairs)])

    rec(tuple(range(g.n)), p.sizes, [])
    return found


def brute_placement_masks(g: Graph, p: Pattern) -> list[int]:
    """Placements as integer masks, edge 0 at the most significant bit."""
    m = g.num_edges()
    return sorted(sum(1 << (m - 1 - e) for e in pl) for pl in _brute_placements(g, p))


def enumerate_colourings_oracle(g: Graph, p: Pattern) -> ArrowResult:
    """Scan colourings in lexicographic order (integer order, bit 1 = Blue)."""
    m = g.num_edges()
    if m > ORACLE_MAX_EDGES:
        raise UnsupportedSize(f"oracle limited to {ORACLE_MAX_EDGES} edges, graph has {m}")
    masks = brute_placement_masks(g, p)
    stats = SearchStats(mode="enumeration")
    total = 1 << m
    for start in range(0, total, _CHUNK):
        c = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bad = np.zeros(c.shape, dtype=bool)
        for pm in masks:
            hit = c & pm
            bad |= (hit == 0) | (hit == pm)
        stats.nodes += len(c)
        good = np.flatnonzero(~bad)
        if len(good):
            code = int(c[good[0]])
            colours = tuple(BLUE if code >> (m - 1 - e) & 1 else RED for e in range(m))
            return ArrowResult(NOT_ARROWS, Colouring(g, colours), stats)
    return ArrowResult(ARROWS, None, stats)
