"""Small-graph enumeration, corpus scans and divergence sets."""

from __future__ import annotations

import logging
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .engine import arrows, is_ramsey_minimal
from .graph import (
    CANONICAL_MAX_N,
    Graph,
    GraphError,
    Pattern,
    UnsupportedSize,
    canonical_form,
    max_clique_size,
    parse_graph6,
    write_graph6,
)

log = logging.getLogger(__name__)

ENUM_MAX_N = 7


def enumerate_graphs_small(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by vertex extension: every graph on n vertices is some graph on
    n-1 vertices plus one vertex with an arbitrary neighbourhood.  Output is
    sorted by (edge count, canonical graph6).
    """
    if not 1 <= n <= ENUM_MAX_N:
        raise UnsupportedSize(f"enumeration supports 1 <= n <= {ENUM_MAX_N}, got {n}")
    yield from _level(n)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[str, Graph] = {}
    for base in _level(n - 1):
        for nb in range(1 << (n - 1)):
            rows = list(base.adj) + [nb]
            for v in range(n - 1):
                if nb >> v & 1:
                    rows[v] |= 1 << (n - 1)
            canon = canonical_form(Graph(n, tuple(rows)))
            seen.setdefault(write_graph6(canon), canon)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].num_edges(), k)))


def enumerate_up_to(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs_small(n)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Union[Graph, "ParseFailure"]]:
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except GraphError as exc:
            yield ParseFailure(lineno, line, str(exc))


@dataclass
class ParseFailure:
    line: int
    text: str
    error: str


@dataclass
class ScanRecord:
    graph: str
    n: int
    omega: int
    arrows_target: bool
    arrows_cotarget: Optional[bool]
    contains_K6: bool
    minimal_for_target: Optional[bool]
    canonical: bool = True
    isolated_vertices: int = 0
    violation: bool = False

    def to_json(self) -> dict:
        return asdict(self)


def _label(g: Graph) -> tuple[str, bool]:
    if g.n <= CANONICAL_MAX_N:
        return write_graph6(canonical_form(g)), True
    return write_graph6(g), False


def scan_graph(g: Graph, target: Pattern, cotarget: Pattern, minimality: bool = True) -> ScanRecord:
    label, canon = _label(g)
    omega = max_clique_size(g)
    hit = arrows(g, target, canonical_witness=False).arrows
    co = mini = None
    if hit:
        co = arrows(g, cotarget, canonical_witness=False).arrows
        if minimality:
            mini = is_ramsey_minimal(g, target).is_minimal
    rec = ScanRecord(
        graph=label,
        n=g.n,
        omega=omega,
        arrows_target=hit,
        arrows_cotarget=co,
        contains_K6=omega >= 6,
        minimal_for_target=mini,
        canonical=canon,
        isolated_vertices=len(g.isolated_vertices()),
    )
    rec.violation = bool(hit and co is False and not rec.contains_K6)
    return rec


def _scan_item(args):
    item, target, cotarget, minimality = args
    if isinstance(item, ParseFailure):
        return item
    return scan_graph(item, target, cotarget, minimality)


def scan_corpus(
    source: Iterable[Union[Graph, ParseFailure]],
    target: Pattern,
    cotarget: Pattern,
    *,
    workers: int = 1,
    minimality: bool = True,
) -> Iterator[Union[ScanRecord, ParseFailure]]:
    """Scan records in input order.  Violations (target but not cotarget, no K6) are logged."""
    jobs = ((item, target, cotarget, minimality) for item in source)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_scan_item, jobs, chunksize=8)
            for rec in results:
                _warn(rec)
                yield rec
    else:
        for job in jobs:
            rec = _scan_item(job)
            _warn(rec)
            yield rec


def _warn(rec):
    if isinstance(rec, ScanRecord) and rec.violation:
        log.error("VIOLATION: %s arrows the target, not the cotarget, and has no K6", rec.graph)


@dataclass
class ScanSummary:
    records: int = 0
    errors: int = 0
    arrows_target: int = 0
    violations: list = field(default_factory=list)


def summarize(records: Iterable[Union[ScanRecord, ParseFailure]]) -> ScanSummary:
    s = ScanSummary()
    for rec in records:
        if isinstance(rec, ParseFailure):
            s.errors += 1
            continue
        s.records += 1
        s.arrows_target += rec.arrows_target
        if rec.violation:
            s.violations.append(rec.graph)
    return s


@dataclass
class DivergenceResult:
    members: list[str]
    scanned: int = 0
    errors: list = field(default_factory=list)


def divergence_set(source: Iterable[Union[Graph, ParseFailure]], p1: Pattern, p2: Pattern) -> DivergenceResult:
    """Corpus graphs minimal for one pattern and not Ramsey for the other."""
    members: dict[str, None] = {}
    result = DivergenceResult([])
    for item in source:
        if isinstance(item, ParseFailure):
            result.errors.append(item)
            continue
        result.scanned += 1
        a1 = arrows(item, p1, canonical_witness=False).arrows
        a2 = arrows(item, p2, canonical_witness=False).arrows
        hit = (a1 and not a2 and is_ramsey_minimal(item, p1).is_minimal) or (
            a2 and not a1 and is_ramsey_minimal(item, p2).is_minimal
        )
        if hit:
            members.setdefault(_label(item)[0], None)
    result.members = list(members)
    return result
