"""CNF export of arrowing queries, plus a small enumeration checker.

Variable ``i`` (1-based) is the ``i``-th edge in lexicographic edge order and
is true iff that edge is Red.  The formula is satisfiable iff G does not
arrow the pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import placement_edge_sets
from .graph import BLUE, RED, Colouring, Graph, Pattern, UnsupportedSize

ENUM_MAX_VARS = 24


class DimacsError(ValueError):
    pass


@dataclass
class CnfFormula:
    num_vars: int
    clauses: list[list[int]]
    edges: list[tuple[int, int]]


def pattern_placements(g: Graph, p: Pattern) -> list[frozenset]:
    edges = g.edges()
    return [frozenset(edges[i] for i in pl) for pl in placement_edge_sets(g, p)]


def to_cnf(g: Graph, p: Pattern) -> CnfFormula:
    clauses = []
    for pl in placement_edge_sets(g, p):
        clauses.append([-(e + 1) for e in pl])
        clauses.append([e + 1 for e in pl])
    return CnfFormula(g.num_edges(), clauses, g.edges())


def write_dimacs(f: CnfFormula) -> str:
    lines = ["c variable i is true iff edge i is Red; edges in lexicographic order"]
    lines += [f"c edge {i + 1} = ({u},{v})" for i, (u, v) in enumerate(f.edges)]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    lines += [" ".join(map(str, cl)) + " 0" for cl in f.clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = num_clauses = None
    edges: dict[int, tuple[int, int]] = {}
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 5 and parts[1] == "edge" and parts[3] == "=":
                u, v = parts[4].strip("()").split(",")
                edges[int(parts[2])] = (int(u), int(v))
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad header {raw!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before header")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise DimacsError(f"line {lineno}: non-integer literal in {raw!r}") from None
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    clauses: list[list[int]] = []
    cur: list[int] = []
    for lit in literals:
        if lit == 0:
            clauses.append(cur)
            cur = []
        else:
            if abs(lit) > num_vars:
                raise DimacsError(f"literal {lit} out of range")
            cur.append(lit)
    if cur:
        raise DimacsError("last clause not terminated by 0")
    if len(clauses) != num_clauses:
        raise DimacsError(f"header says {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, clauses, [edges[i] for i in sorted(edges)])


def enumerate_sat(f: CnfFormula) -> list[bool] | None:
    """First model in lexicographic order (variable 1 most significant, True first), or None."""
    m = f.num_vars
    if m > ENUM_MAX_VARS:
        raise UnsupportedSize(f"enumeration limited to {ENUM_MAX_VARS} variables")
    # code bit for variable i set <=> variable false (Blue), so integer order = Red-first lex order
    total = 1 << m
    chunk = 1 << 20
    for start in range(0, total, chunk):
        c = np.arange(start, min(total, start + chunk), dtype=np.int64)
        ok = np.ones(c.shape, dtype=bool)
        for cl in f.clauses:
            sat = np.zeros(c.shape, dtype=bool)
            for lit in cl:
                bit = (c >> (m - abs(lit))) & 1
                sat |= (bit == 0) if lit > 0 else (bit == 1)
            ok &= sat
        good = np.flatnonzero(ok)
        if len(good):
            code = int(c[good[0]])
            return [not (code >> (m - 1 - i) & 1) for i in range(m)]
    return None


def decode_model(g: Graph, model: list[bool]) -> Colouring:
    return Colouring(g, tuple(RED if x else BLUE for x in model))
