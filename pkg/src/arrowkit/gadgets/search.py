"""Recolourings known only by their properties, recovered by exhaustive certified search.

The search walks candidates in a fixed order and returns the first that
passes certification.  Any certified candidate supports the same argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Optional

from ..graph import BLUE, RED, Colour
from .builtin import _assume_clique, certify
from .cases import CaseReport
from .spec import FB, FR, KEEP, GadgetError, GadgetSpec, Rule

SEARCH_NAMES = ("t2_5v", "t2_k62missing", "t2_k6missing", "cor_small_k4")


class GadgetNotFound(GadgetError):
    pass


# lemma1: the big recolouring of V ------------------------------------------------------------------------

LEMMA1_CLASSES = ("V_R", "V_B", "V'", "x", "y", "x_R", "y_R", "x_B", "y_B")
BLUE_VERTICES = ("V_B", "x_B", "y_B")
RED_VERTICES = ("V_R", "x_R", "y_R")
_NON_BLUE = frozenset(LEMMA1_CLASSES) - frozenset(BLUE_VERTICES)
_NON_RED = frozenset(LEMMA1_CLASSES) - frozenset(RED_VERTICES)

LEMMA1_FIXED = {
    **{p: FR for p in combinations(BLUE_VERTICES, 2)},
    **{p: FB for p in combinations(RED_VERTICES, 2)},
    ("V_B", "V'"): FB,
}


def lemma1_frame(n: int) -> GadgetSpec:
    """lemma1 classes with every rule fixed in advance; the remaining class pairs are left open."""
    big = "n-3"
    return GadgetSpec(
        "lemma1",
        classes=[(c, big if c.startswith("V") else 1) for c in LEMMA1_CLASSES],
        internal={"V_B": FR, "V_R": FB, "V'": KEEP},
        boundary={**{c: FB for c in BLUE_VERTICES}, **{c: FR for c in RED_VERTICES}},
        pairs=dict(LEMMA1_FIXED),
        n=n,
        notes="Pair rules form the class graph G_R (ForceRed) and its complement G_B (ForceBlue).",
    )


def class_graph(spec: GadgetSpec, colour: Colour) -> set[frozenset]:
    rule = Rule.force(colour)
    return {frozenset(k) for k, r in spec.pairs.items() if r is rule}


def _cliques(edges: set[frozenset], nodes, k: int) -> list[tuple]:
    return [c for c in combinations(nodes, k) if all(frozenset(p) in edges for p in combinations(c, 2))]


def lemma1_properties(spec: GadgetSpec) -> dict[str, bool]:
    """The three structural properties of the lemma1 class graph.

    property1: the ForceRed graph G_R and its complement are K_4-free;
    property2: red triangles touch {V_B, x_B, y_B}, blue ones {V_R, x_R, y_R};
    property3: {x_B, y_B, V_B} is all red, {x_R, y_R, V_R} all blue.
    """
    red, blue = class_graph(spec, RED), class_graph(spec, BLUE)
    complete = all(frozenset(p) in red | blue for p in combinations(LEMMA1_CLASSES, 2))
    p1 = complete and not _cliques(red, LEMMA1_CLASSES, 4) and not _cliques(blue, LEMMA1_CLASSES, 4)
    p2 = all(set(t) & set(BLUE_VERTICES) for t in _cliques(red, LEMMA1_CLASSES, 3)) and all(
        set(t) & set(RED_VERTICES) for t in _cliques(blue, LEMMA1_CLASSES, 3)
    )
    p3 = (
        all(frozenset(p) in red for p in combinations(BLUE_VERTICES, 2))
        and spec.internal.get("V_B") is FR
        and all(frozenset(p) in blue for p in combinations(RED_VERTICES, 2))
        and spec.internal.get("V_R") is FB
    )
    return {"property1": p1, "property2": p2, "property3": p3, "V_B-V' blue": frozenset(("V_B", "V'")) in blue}


def _lemma1_candidates(n: int) -> Iterator[GadgetSpec]:
    frame = lemma1_frame(n)
    pairs = [p for p in combinations(LEMMA1_CLASSES, 2)]
    free = [p for p in pairs if p not in LEMMA1_FIXED]
    colour = {frozenset(p): (0 if r is FR else 1) for p, r in LEMMA1_FIXED.items()}
    nodes = LEMMA1_CLASSES

    def bad(a: str, b: str, c: int) -> bool:
        same = [v for v in nodes if v not in (a, b) and colour.get(frozenset((a, v))) == c and colour.get(frozenset((b, v))) == c]
        # property (2): triangles of one colour must touch the vertices of the other kind
        restricted = _NON_BLUE if c == 0 else _NON_RED
        if a in restricted and b in restricted and any(v in restricted for v in same):
            return True
        # property (1): no monochromatic K_4 in the class graph
        return any(colour.get(frozenset((u, v))) == c for u, v in combinations(same, 2))

    def rec(i: int) -> Iterator[GadgetSpec]:
        if i == len(free):
            spec = frame.copy()
            for p in free:
                spec.pairs[p] = FR if colour[frozenset(p)] == 0 else FB
            yield spec
            return
        a, b = free[i]
        for c in (0, 1):
            if not bad(a, b, c):
                colour[frozenset((a, b))] = c
                yield from rec(i + 1)
                del colour[frozenset((a, b))]

    yield from rec(0)


def lemma1_gadget_search(n: int) -> GadgetSpec:
    if n < 4:
        raise GadgetError("lemma1 gadget needs n >= 4")
    for spec in _lemma1_candidates(n):
        if certify(spec, n).passed:
            return spec
    raise GadgetNotFound(f"no certified lemma1 recolouring at n={n}")


# K_3 gadgets ------------------------------------------------------------------

def _interior_colourings(names, absent=(), forced=None) -> Iterator[dict]:
    """Red-first DFS over colourings of the present pairs with no mono triangle."""
    forced = forced or {}
    pairs = [p for p in combinations(names, 2) if frozenset(p) not in absent]
    col: dict[frozenset, int] = {}

    def closes_triangle(a, b, c) -> bool:
        return any(
            col.get(frozenset((a, v))) == c and col.get(frozenset((b, v))) == c for v in names if v not in (a, b)
        )

    def rec(i: int):
        if i == len(pairs):
            yield dict(col)
            return
        a, b = pairs[i]
        options = forced.get(frozenset((a, b)), (0, 1))
        for c in options:
            if not closes_triangle(a, b, c):
                col[frozenset((a, b))] = c
                yield from rec(i + 1)
                del col[frozenset((a, b))]

    yield from rec(0)


def _with_interior(spec: GadgetSpec, col: dict) -> GadgetSpec:
    out = spec.copy()
    for p, c in col.items():
        a, b = sorted(p, key=spec.index)
        out.pairs[a, b] = FR if c == 0 else FB
    return out


def _t2_5v_candidates() -> Iterator[GadgetSpec]:
    names = ["x", "y_R", "z_R", "y_B", "z_B"]
    for xb in (KEEP, FR, FB):
        base = GadgetSpec(
            "t2_5v",
            classes=[(c, 1) for c in names],
            boundary={"x": xb, "y_R": FR, "z_R": FR, "y_B": FB, "z_B": FB},
            n=3,
            notes="V_R = {x, y_R, z_R} red, V_B = {x, y_B, z_B} blue; y_R, z_R (and y_B, z_B) have disjoint outside neighbourhoods.",
        )
        _assume_clique(base, ["x", "y_R", "z_R"], RED, set(names))
        _assume_clique(base, ["x", "y_B", "z_B"], BLUE, set(names))
        for col in _interior_colourings(names):
            yield _with_interior(base, col)


K6_NAMES = ["x_R", "y_R", "z_R", "x_B", "y_B", "z_B"]


def _k6_base(name: str, absent) -> GadgetSpec:
    base = GadgetSpec(name, classes=[(c, 1) for c in K6_NAMES], absent=set(absent), n=3)
    _assume_clique(base, K6_NAMES[:3], RED, set(K6_NAMES))
    _assume_clique(base, K6_NAMES[3:], BLUE, set(K6_NAMES))
    return base


def _t2_k62missing_candidates() -> Iterator[GadgetSpec]:
    absent = {("x_R", "x_B"), ("y_R", "y_B")}
    absent_fs = {frozenset(p) for p in absent}
    for mask in range(1 << 6):
        side = {c: (mask >> (5 - i)) & 1 for i, c in enumerate(K6_NAMES)}
        base = _k6_base("t2_k62missing", absent)
        base.boundary = {c: FR if side[c] == 0 else FB for c in K6_NAMES}
        base.notes = "Red (blue) vertices send red (blue) edges outside; two disjoint V_R-V_B edges missing."
        # no red edge between red vertices, no blue edge between blue vertices
        forced = {frozenset((a, b)): (1 - side[a],) for a, b in combinations(K6_NAMES, 2) if side[a] == side[b]}
        for col in _interior_colourings(K6_NAMES, absent_fs, forced):
            yield _with_interior(base, col)


def _cor_small_candidates() -> Iterator[GadgetSpec]:
    names = ["a", "b", "c", "d"]
    options = (FR, FB, KEEP)
    for combo in _product(options, len(names)):
        base = GadgetSpec(
            "cor_small_k4",
            classes=[(c, 1) for c in names],
            boundary=dict(zip(names, combo)),
            n=3,
            notes="V = {a, b, c, d}; every mono K_3 after recolouring has two vertices outside V.",
        )
        for col in _interior_colourings(names):
            yield _with_interior(base, col)


def _product(options, k):
    if k == 0:
        yield ()
        return
    for o in options:
        for rest in _product(options, k - 1):
            yield (o,) + rest


# w-extension check for t2_k6missing -----------------------------------------------

@dataclass
class ExtensionCase:
    neighbourhood: tuple[str, ...]
    case: int
    rule: str
    ok: bool


@dataclass
class ExtensionReport:
    cases: list[ExtensionCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)


def _colour_of(spec: GadgetSpec, a: str, b: str) -> Optional[int]:
    if spec.is_absent(a, b):
        return None
    r = spec.rule(a, b)
    return None if r is KEEP else (0 if r is FR else 1)


def _extension_ok(spec: GadgetSpec, nw, wcol: dict[str, int]) -> bool:
    # no triangle w, p, q with pq present and all three edges one colour
    for p, q in combinations(nw, 2):
        c = _colour_of(spec, p, q)
        if c is not None and wcol[p] == c and wcol[q] == c:
            return False
    return True


def _mono_paths(spec: GadgetSpec, nw, colour: int) -> list[tuple[str, ...]]:
    out = []
    for order in permutations(nw):
        if order[0] > order[-1]:
            continue
        if all(_colour_of(spec, order[i], order[i + 1]) == colour for i in range(3)):
            out.append(order)
    return out


def w_extension_report(spec: GadgetSpec) -> ExtensionReport:
    """Check both outside-vertex recolouring rules for every 4-set of gadget vertices."""
    report = ExtensionReport()
    for nw in combinations(K6_NAMES, 4):
        if not {"x_R", "x_B"} <= set(nw):
            reds, blues = _mono_paths(spec, nw, 0), _mono_paths(spec, nw, 1)
            ok, rule = False, "no red and blue P_3"
            if blues:
                for a, b, c, d in reds:
                    wcol = {a: 0, d: 0, b: 1, c: 1}
                    if _extension_ok(spec, nw, wcol):
                        ok, rule = True, f"red P_3 {a}-{b}-{c}-{d}"
                        break
            report.cases.append(ExtensionCase(nw, 1, rule, ok))
        else:
            ok, rule = False, "no admissible centre"
            for a in nw:
                if a in ("x_R", "x_B"):
                    continue
                (b,) = [v for v in nw if v not in ("x_R", "x_B", a)]
                ax = _colour_of(spec, a, "x_R")
                if ax is None:
                    continue
                wcol = {a: 1 - ax, "x_R": 1 - ax, "x_B": 1 - ax, b: ax}
                if _extension_ok(spec, nw, wcol):
                    ok, rule = True, f"centre {a}"
                    break
            report.cases.append(ExtensionCase(nw, 2, rule, ok))
    return report


def _t2_k6missing_candidates() -> Iterator[GadgetSpec]:
    absent = {("x_R", "x_B")}
    for col in _interior_colourings(K6_NAMES, {frozenset(p) for p in absent}):
        base = _k6_base("t2_k6missing", absent)
        base.notes = "Every missing V_R-V_B edge touches x_R; x_R x_B missing. Outside vertices are recoloured per neighbourhood."
        yield _with_interior(base, col)


_CANDIDATES = {
    "t2_5v": _t2_5v_candidates,
    "t2_k62missing": _t2_k62missing_candidates,
    "t2_k6missing": _t2_k6missing_candidates,
    "cor_small_k4": _cor_small_candidates,
}


def certify_search(spec: GadgetSpec) -> tuple[CaseReport, Optional[ExtensionReport]]:
    report = certify(spec, 3)
    ext = w_extension_report(spec) if spec.name == "t2_k6missing" else None
    return report, ext


def search_gadget(name: str) -> GadgetSpec:
    if name not in _CANDIDATES:
        raise GadgetError(f"unknown search gadget {name!r}; known: {', '.join(SEARCH_NAMES)}")
    for spec in _CANDIDATES[name]():
        report, ext = certify_search(spec)
        if report.passed and (ext is None or ext.passed):
            return spec
    raise GadgetNotFound(f"no certified recolouring for {name}")
