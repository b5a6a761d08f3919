"""Exact decision of G -> (clique union) by DPLL-style search over edge colourings.

Every placement of the pattern is a set of edges; a colouring avoids the
pattern iff no placement is entirely Red and none is entirely Blue.  The
search keeps, per placement, the number of edges already Red and already
Blue, which gives conflict detection and unit propagation in O(occurrences).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    BLUE,
    RED,
    Colour,
    Colouring,
    ColouringError,
    Graph,
    Pattern,
    bits,
    colour_class,
    delete_edge,
    find_clique_union,
    find_clique_union_masks,
    iter_cliques,
)

ARROWS = "Arrows"
NOT_ARROWS = "NotArrows"

PLACEMENT_LIMIT = 10**6


class TooManyPlacements(Exception):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    millis: float = 0.0
    mode: str = "propagation"


@dataclass
class ArrowResult:
    verdict: str
    witness: Optional[Colouring]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def arrows(self) -> bool:
        return self.verdict == ARROWS


@dataclass
class MinimalityReport:
    is_ramsey: bool
    critical_edges: list
    is_minimal: bool
    isolated_vertices: list = field(default_factory=list)


# placements ----------------------------------------------------------------

def vertex_placements(g: Graph, p: Pattern, limit: Optional[int] = None) -> list[list[int]]:
    """All placements of ``p`` as lists of vertex masks, one per unordered placement."""
    out: list[list[int]] = []
    sizes = list(p.sizes)
    if sum(sizes) > g.n:
        return out

    def rec(cand: int, i: int, floor: int, acc: list[int]):
        if i == len(sizes):
            out.append(acc[:])
            if limit is not None and len(out) > limit:
                raise TooManyPlacements
            return
        k = sizes[i]
        for clique in iter_cliques(g.adj, cand, k):
            low = clique & -clique
            if low < floor:
                continue
            nxt = low if i + 1 < len(sizes) and sizes[i + 1] == k else 0
            acc.append(clique)
            rec(cand & ~clique, i + 1, nxt, acc)
            acc.pop()

    rec((1 << g.n) - 1, 0, 0, [])
    return out


def edge_index(g: Graph) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(g.edges())}


def placement_edge_sets(g: Graph, p: Pattern, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Placements as sorted tuples of edge indices (fixed lexicographic edge order)."""
    idx = edge_index(g)
    result = []
    for parts in vertex_placements(g, p, limit):
        es = []
        for m in parts:
            vs = list(bits(m))
            for a in range(len(vs)):
                for b in range(a + 1, len(vs)):
                    es.append(idx[vs[a], vs[b]])
        result.append(tuple(sorted(es)))
    return result


# mono detection --------------------------------------------------------------

def find_mono(c: Colouring, p: Pattern, colour: Optional[Colour] = None):
    """Monochromatic placement of ``p`` as ``(colour, parts)``, or None."""
    if not c.is_total:
        raise ColouringError("find_mono needs a total colouring")
    for col in ([colour] if colour is not None else [RED, BLUE]):
        parts = find_clique_union(colour_class(c, col), p)
        if parts is not None:
            return col, parts
    return None


# the solver ------------------------------------------------------------------

class _Solver:
    """Search state for one (graph, red pattern, blue pattern) query."""

    def __init__(self, m: int, red_pl: list[tuple[int, ...]], blue_pl: list[tuple[int, ...]]):
        self.m = m
        # placement ids: red ones first, then blue ones
        self.pl = list(red_pl) + list(blue_pl)
        self.nred = len(red_pl)
        self.size = [len(p) for p in self.pl]
        self.occ: list[list[int]] = [[] for _ in range(m)]
        for pid, p in enumerate(self.pl):
            for e in p:
                self.occ[e].append(pid)
        self.nodes = 0

    def _reset(self):
        self.val = [-1] * self.m  # -1 unset, 0 red, 1 blue
        npl = len(self.pl)
        self.same = [0] * npl  # edges already in the placement's own colour
        self.dead = [0] * npl  # edges already in the opposite colour
        self.trail: list[int] = []

    def _own(self, pid: int) -> int:
        return 0 if pid < self.nred else 1

    def _assign(self, e: int, col: int, queue: list) -> bool:
        self.val[e] = col
        self.trail.append(e)
        ok = True
        # counters must be updated for every occurrence so undo stays exact
        for pid in self.occ[e]:
            if self._own(pid) == col:
                self.same[pid] += 1
                if self.dead[pid] == 0:
                    left = self.size[pid] - self.same[pid]
                    if left == 0:
                        ok = False
                    elif left == 1:
                        queue.append((pid, 1 - col))
            else:
                self.dead[pid] += 1
        return ok

    def _unassign_to(self, mark: int):
        while len(self.trail) > mark:
            e = self.trail.pop()
            col = self.val[e]
            for pid in self.occ[e]:
                if self._own(pid) == col:
                    self.same[pid] -= 1
                else:
                    self.dead[pid] -= 1
            self.val[e] = -1

    def _propagate(self, queue: list) -> bool:
        while queue:
            pid, col = queue.pop()
            if self.dead[pid]:
                continue
            target = -1
            for e in self.pl[pid]:
                if self.val[e] == -1:
                    target = e
                    break
            if target == -1:
                return False
            if not self._assign(target, col, queue):
                return False
        return True

    def _set(self, e: int, col: int) -> bool:
        if self.val[e] != -1:
            return self.val[e] == col
        queue: list = []
        return self._assign(e, col, queue) and self._propagate(queue)

    def _pick(self) -> int:
        best_left, best_e = None, -1
        for pid, p in enumerate(self.pl):
            if self.dead[pid]:
                continue
            left = self.size[pid] - self.same[pid]
            if best_left is None or left < best_left:
                for e in p:
                    if self.val[e] == -1:
                        best_left, best_e = left, e
                        break
                if left == 2:
                    break
        if best_e == -1:
            for e in range(self.m):
                if self.val[e] == -1:
                    return e
        return best_e

    def _dfs(self, first_red_only: bool) -> bool:
        e = self._pick()
        if e == -1:
            return True
        self.nodes += 1
        for col in ((0,) if first_red_only else (0, 1)):
            mark = len(self.trail)
            if self._set(e, col) and self._dfs(False):
                return True
            self._unassign_to(mark)
        return False

    def solve(self, fixed: Optional[dict[int, int]] = None, symmetric: bool = False) -> Optional[list[int]]:
        """A satisfying assignment extending ``fixed`` or None.

        ``symmetric`` restricts the first branch to Red; only valid when the
        red and blue placement lists coincide and nothing is fixed.
        """
        self._reset()
        queue: list = []
        for pid in range(len(self.pl)):
            if self.size[pid] == 0:
                return None
            if self.size[pid] == 1:
                queue.append((pid, 1 - self._own(pid)))
        if not self._propagate(queue):
            return None
        for e, col in sorted((fixed or {}).items()):
            if not self._set(e, col):
                return None
        if self._dfs(symmetric and not fixed):
            return list(self.val)
        return None

    def cubes(self, depth: int) -> list[dict[int, int]]:
        """Split the root into assumption cubes along the heuristic's first decisions."""
        self._reset()
        out = []

        def rec(d: int, acc: dict[int, int]):
            e = self._pick()
            if d == depth or e == -1:
                out.append(dict(acc))
                return
            for col in (0, 1):
                mark = len(self.trail)
                if self._set(e, col):
                    acc[e] = col
                    rec(d + 1, acc)
                    del acc[e]
                self._unassign_to(mark)

        rec(0, {})
        return out


def _solve_cube(args):
    m, red_pl, blue_pl, cube = args
    s = _Solver(m, red_pl, blue_pl)
    return s.solve(cube), s.nodes


def _to_colouring(g: Graph, vals: list[int]) -> Colouring:
    return Colouring(g, tuple(RED if v == 0 else BLUE for v in vals))


def _lex_first(solver: _Solver, start: list[int]) -> list[int]:
    # walk the edge order; Red survives at position e iff some model extends prefix+Red
    current = start
    fixed: dict[int, int] = {}
    for e in range(solver.m):
        if current[e] == 0:
            fixed[e] = 0
            continue
        fixed[e] = 0
        alt = solver.solve(fixed)
        if alt is not None:
            current = alt
        else:
            fixed[e] = 1
    return current


def _on_the_fly(g: Graph, p_red: Pattern, p_blue: Pattern, stats: SearchStats) -> Optional[list[int]]:
    """Lex-order DFS with detection recomputed on the colour classes (no placement lists)."""
    edges = g.edges()
    m = len(edges)
    rows = [[0] * g.n, [0] * g.n]
    pats = [p_red.sizes, p_blue.sizes]
    vals = [-1] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        stats.nodes += 1
        u, v = edges[i]
        for col in (0, 1):
            rows[col][u] |= 1 << v
            rows[col][v] |= 1 << u
            ok = find_clique_union_masks(rows[col], g.n, pats[col]) is None
            if ok:
                vals[i] = col
                if rec(i + 1):
                    return True
            rows[col][u] &= ~(1 << v)
            rows[col][v] &= ~(1 << u)
        vals[i] = -1
        return False

    return vals if rec(0) else None


def arrows_pair(
    g: Graph,
    p_red: Pattern,
    p_blue: Pattern,
    *,
    workers: int = 1,
    canonical_witness: bool = True,
    placement_limit: int = PLACEMENT_LIMIT,
) -> ArrowResult:
    """Does every colouring of ``g`` contain a red ``p_red`` or a blue ``p_blue``?

    On NotArrows the witness is the lexicographically first avoiding
    colouring (fixed edge order, Red < Blue) unless ``canonical_witness`` is
    off, in which case it is whatever the search found first.
    """
    t0 = time.perf_counter()
    stats = SearchStats()
    m = g.num_edges()
    if max(p_red.sizes) > g.n or max(p_blue.sizes) > g.n:
        stats.millis = (time.perf_counter() - t0) * 1000
        return ArrowResult(NOT_ARROWS, Colouring.uniform(g, RED), stats)
    try:
        red_pl = placement_edge_sets(g, p_red, placement_limit)
        blue_pl = red_pl if p_blue == p_red else placement_edge_sets(g, p_blue, placement_limit)
    except TooManyPlacements:
        stats.mode = "on-the-fly"
        vals = _on_the_fly(g, p_red, p_blue, stats)
        stats.millis = (time.perf_counter() - t0) * 1000
        if vals is None:
            return ArrowResult(ARROWS, None, stats)
        return ArrowResult(NOT_ARROWS, _to_colouring(g, vals), stats)

    symmetric = p_red == p_blue
    solver = _Solver(m, red_pl, blue_pl)
    if workers > 1:
        cubes = solver.cubes(depth=max(1, (workers - 1).bit_length() + 1))
        found = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for vals, nodes in pool.map(_solve_cube, [(m, red_pl, blue_pl, c) for c in cubes]):
                stats.nodes += nodes
                if vals is not None and found is None:
                    found = vals
    else:
        found = solver.solve(symmetric=symmetric)
        stats.nodes = solver.nodes

    if found is None:
        stats.millis = (time.perf_counter() - t0) * 1000
        return ArrowResult(ARROWS, None, stats)
    if canonical_witness:
        if symmetric and found and found[0] == 1:
            found = [1 - v for v in found]
        found = _lex_first(solver, found)
        stats.nodes = solver.nodes if workers == 1 else stats.nodes + solver.nodes
    stats.millis = (time.perf_counter() - t0) * 1000
    return ArrowResult(NOT_ARROWS, _to_colouring(g, found), stats)


def arrows(g: Graph, p: Pattern, **kw) -> ArrowResult:
    return arrows_pair(g, p, p, **kw)


def is_ramsey_minimal(g: Graph, p: Pattern) -> MinimalityReport:
    is_ramsey = arrows(g, p, canonical_witness=False).arrows
    if is_ramsey:
        critical = [(u, v) for u, v in g.edges() if not arrows(delete_edge(g, u, v), p, canonical_witness=False).arrows]
    else:
        # subgraphs of a non-Ramsey graph are non-Ramsey, so every edge is critical
        critical = g.edges()
    isolated = g.isolated_vertices()
    minimal = is_ramsey and len(critical) == g.num_edges() and not isolated
    return MinimalityReport(is_ramsey, critical, minimal, isolated)
