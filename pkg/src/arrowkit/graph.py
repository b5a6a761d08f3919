"""Small simple graphs as bitmask adjacency rows, plus clique machinery.

A vertex set is a ``frozenset`` of vertex indices at the API boundary;
internally everything is an ``int`` bitmask (bit ``v`` set = vertex ``v``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64

VertexSet = frozenset
Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


class UnsupportedSize(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSize(f"graph has {self.n} vertices, cap is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at ({v},{u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)]) if not self.has_edge(u, v) else self

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``perm[i]``."""
        pos = {old: new for new, old in enumerate(perm)}
        return Graph.from_edges(self.n, [(pos[u], pos[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Graph(n={self.n}, g6={write_graph6(self)!r})"


# graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("header not supported", 0)
    if not s:
        raise Graph6Error("empty input", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated vertex count", len(s))
        if s[1] == "~":
            raise Graph6Error("vertex count above 258047 is not supported", 1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error("non-canonical long length prefix", 0)
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error("truncated edge data", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage", pos + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbytes and (ord(body[-1]) - 63) & ((1 << (6 * nbytes - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(rows))


# derived graphs ---------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(len(verts), [(pos[u], pos[v]) for u, v in combinations(verts, 2) if g.has_edge(u, v)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


# cliques ------------------------------------------------------------------

def _clique_search(adj: Sequence[int], cand: int, k: int) -> Optional[int]:
    # lexicographically first k-clique inside cand
    if k == 0:
        return 0
    if cand.bit_count() < k:
        return None
    for v in bits(cand):
        rest = cand >> (v + 1) << (v + 1)
        found = _clique_search(adj, rest & adj[v], k - 1)
        if found is not None:
            return found | 1 << v
    return None


def iter_cliques(adj: Sequence[int], cand: int, k: int) -> Iterator[int]:
    """Every k-clique inside ``cand`` as a mask, in lexicographic order."""
    if k == 0:
        yield 0
        return
    if cand.bit_count() < k:
        return
    for v in bits(cand):
        rest = cand >> (v + 1) << (v + 1)
        for sub in iter_cliques(adj, rest & adj[v], k - 1):
            yield sub | 1 << v


def find_clique(g: Graph, k: int) -> Optional[frozenset]:
    if k < 1:
        raise ValueError("k must be at least 1")
    found = _clique_search(g.adj, (1 << g.n) - 1, k)
    if found is None:
        return None
    members = list(bits(found))
    assert all(g.has_edge(u, v) for u, v in combinations(members, 2))
    return frozenset(members)


def max_clique_size(g: Graph) -> int:
    best = 0

    def grow(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            grow(size + 1, cand & g.adj[v])

    grow(0, (1 << g.n) - 1)
    return best


def _union_search(adj: Sequence[int], cand: int, sizes: Sequence[int], floor: int) -> Optional[list[int]]:
    if not sizes:
        return []
    k = sizes[0]
    # equal consecutive sizes: force increasing lowest vertex to skip permuted repeats
    for clique in iter_cliques(adj, cand, k):
        low = clique & -clique
        if low < floor:
            continue
        nxt_floor = low if len(sizes) > 1 and sizes[1] == k else 0
        rest = _union_search(adj, cand & ~clique, sizes[1:], nxt_floor)
        if rest is not None:
            return [clique] + rest
    return None


def find_clique_union_masks(adj: Sequence[int], n: int, sizes: Sequence[int]) -> Optional[list[int]]:
    if sum(sizes) > n:
        return None
    return _union_search(adj, (1 << n) - 1, list(sizes), 0)


def find_clique_union(g: Graph, p: "Pattern") -> Optional[list[frozenset]]:
    found = find_clique_union_masks(g.adj, g.n, p.sizes)
    if found is None:
        return None
    parts = [frozenset(bits(m)) for m in found]
    seen: set[int] = set()
    for part in parts:
        assert not seen & part
        seen |= part
        assert all(g.has_edge(u, v) for u, v in combinations(sorted(part), 2))
    return parts


# canonical form ----------------------------------------------------------

CANONICAL_MAX_N = 10


def _twins(adj: Sequence[int], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_form(g: Graph) -> Graph:
    """Relabelling with the lexicographically least upper-triangle encoding.

    Bits are read in graph6 column order, x(0,1) x(0,2) x(1,2) x(0,3) ...
    Position k only contributes column k, so the search fixes one position at
    a time and keeps only candidates achieving the smallest column.  Of two
    unplaced twins (same neighbours apart from each other) only one is tried:
    swapping them is an automorphism fixing the prefix.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise UnsupportedSize(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return g
    adj = g.adj
    best: list[int] = []
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []

    def column(v: int) -> int:
        c = 0
        for u in perm:
            c = c << 1 | (adj[u] >> v & 1)
        return c

    def search(remaining: int):
        nonlocal best, best_perm
        k = len(perm)
        if k == n:
            if not best or cols < best:
                best = cols[:]
                best_perm = perm[:]
            return
        scored = [(column(v), v) for v in bits(remaining)]
        low = min(c for c, _ in scored)
        if best and cols + [low] > best[: k + 1]:
            return
        tried: list[int] = []
        for c, v in scored:
            if c != low or any(_twins(adj, v, t) for t in tried):
                continue
            tried.append(v)
            perm.append(v)
            cols.append(c)
            search(remaining & ~(1 << v))
            perm.pop()
            cols.pop()

    search((1 << n) - 1)
    return g.relabel(best_perm)


# patterns -----------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """Vertex-disjoint union of cliques, sizes kept non-increasing."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        if not sizes:
            raise ValueError("pattern needs at least one clique")
        if any(not isinstance(s, int) or s < 2 for s in sizes):
            raise ValueError(f"clique sizes must be integers >= 2, got {sizes}")
        object.__setattr__(self, "sizes", tuple(sorted(sizes, reverse=True)))

    @classmethod
    def of(cls, *sizes: int) -> "Pattern":
        return cls(tuple(sizes))

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse the clique-union grammar: ``K4``, ``K4+K3``, ``K3+2K2``."""
        sizes: list[int] = []
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty pattern")
        for term in src.split("+"):
            mult, sep, size = term.partition("K")
            if not sep or not size.isdigit() or (mult and not mult.isdigit()):
                raise ValueError(f"bad pattern term {term!r} in {text!r}")
            count = int(mult) if mult else 1
            if count < 1:
                raise ValueError(f"bad multiplier in {term!r}")
            sizes.extend([int(size)] * count)
        return cls(tuple(sizes))

    def __str__(self):
        terms = []
        i = 0
        while i < len(self.sizes):
            j = i
            while j < len(self.sizes) and self.sizes[j] == self.sizes[i]:
                j += 1
            count = j - i
            terms.append(f"{count if count > 1 else ''}K{self.sizes[i]}")
            i = j
        return "+".join(terms)


# colourings ----------------------------------------------------------------

class Colour(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED


RED, BLUE = Colour.RED, Colour.BLUE


class ColouringError(GraphError):
    pass


@dataclass(frozen=True)
class Colouring:
    """Edge colouring aligned with ``graph.edges()``; ``None`` marks Unset."""

    graph: Graph
    colours: tuple[Optional[Colour], ...]

    def __post_init__(self):
        if len(self.colours) != self.graph.num_edges():
            raise ColouringError("colouring length does not match edge count")

    @classmethod
    def from_map(cls, g: Graph, mapping: dict, default: Optional[Colour] = None) -> "Colouring":
        norm = {}
        for (u, v), c in mapping.items():
            a, b = min(u, v), max(u, v)
            if not g.has_edge(a, b):
                raise ColouringError(f"({a},{b}) is not an edge")
            norm[a, b] = c
        return cls(g, tuple(norm.get(e, default) for e in g.edges()))

    @classmethod
    def uniform(cls, g: Graph, colour: Colour) -> "Colouring":
        return cls(g, (colour,) * g.num_edges())

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colours)

    def as_dict(self) -> dict[Edge, Optional[Colour]]:
        return dict(zip(self.graph.edges(), self.colours))

    def colour_of(self, u: int, v: int) -> Optional[Colour]:
        a, b = min(u, v), max(u, v)
        for e, c in zip(self.graph.edges(), self.colours):
            if e == (a, b):
                return c
        raise ColouringError(f"({a},{b}) is not an edge")

    def swapped(self) -> "Colouring":
        return Colouring(self.graph, tuple(None if c is None else c.other for c in self.colours))

    def key(self) -> tuple[int, ...]:
        """Sort key: fixed edge order, Red < Blue."""
        return tuple(0 if c is RED else 1 for c in self.colours)


def colour_class(c: Colouring, colour: Colour) -> Graph:
    if not c.is_total:
        raise ColouringError("colour_class needs a total colouring")
    return Graph.from_edges(c.graph.n, [e for e, col in zip(c.graph.edges(), c.colours) if col is colour])


def format_colouring(c: Colouring) -> str:
    lines = []
    for (u, v), col in zip(c.graph.edges(), c.colours):
        if col is not None:
            lines.append(f"{u} {v} {col.value}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_colouring(g: Graph, text: str) -> Colouring:
    """Read ``u v R`` / ``u v B`` lines; '#' starts a comment. Missing edges stay Unset."""
    mapping = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[2].upper() not in ("R", "B"):
            raise ColouringError(f"line {lineno}: expected 'u v R' or 'u v B', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColouringError(f"line {lineno}: vertex indices must be integers") from None
        key = (min(u, v), max(u, v))
        if key in mapping:
            raise ColouringError(f"line {lineno}: edge {key} coloured twice")
        mapping[key] = Colour(parts[2].upper())
    try:
        return Colouring.from_map(g, mapping)
    except ColouringError as exc:
        raise ColouringError(f"colouring does not fit graph: {exc}") from None


# named graphs ---------------------------------------------------------------

def graham_graph() -> Graph:
    """K_8 minus the 5-cycle 0-1-2-3-4-0."""
    g = Graph.complete(8)
    for i in range(5):
        g = delete_edge(g, i, (i + 1) % 5)
    return g


def named_graph(name: str) -> Graph:
    key = name.strip().upper().replace("−", "-")
    if key in ("K8-C5", "GRAHAM"):
        return graham_graph()
    if key == "C5":
        return Graph.cycle(5)
    if len(key) == 2 and key[0] == "K" and key[1].isdigit() and 3 <= int(key[1]) <= 8:
        return Graph.complete(int(key[1]))
    raise KeyError(f"unknown named graph {name!r}; known: K3..K8, C5, K8-C5")


NAMED_GRAPHS = ("K3", "K4", "K5", "K6", "K7", "K8", "C5", "K8-C5")
