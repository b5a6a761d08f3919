"""Recolouring gadgets transcribed from explicit rule lists, with their conclusion classes.

Class names follow the vertex sets of the arguments they come from:
``V_R``/``W_R`` are vertex sets of red cliques, ``V_B``/``W_B`` of blue ones,
single letters are single vertices.
"""

from __future__ import annotations

from typing import Optional

from ..graph import BLUE, RED
from .cases import CaseReport, ConsequenceClass, analyze_gadget_cases, avoiding, exactly
from .spec import FB, FR, KEEP, OUTSIDE, GadgetError, GadgetSpec, Mixed

BUILTIN_NAMES = ("lemma3_stage1", "lemma3_stage2", "theorem1_final", "t2_first", "t2_path")
VARIANTS = ("disjoint", "intersect")


def _assume_clique(spec: GadgetSpec, members: list[str], colour, singletons: set[str]):
    """Record that ``members`` (classes) jointly span a clique of ``colour`` originally."""
    for i, a in enumerate(members):
        if a not in singletons:
            spec.assume[spec.key(a, a)] = colour
        for b in members[i + 1 :]:
            spec.assume[spec.key(a, b)] = colour


def lemma3_stage1(n: int) -> GadgetSpec:
    # V_R is a red K_n, ab one of its edges, R = V_R - {a, b}
    spec = GadgetSpec(
        "lemma3_stage1",
        classes=[("a", 1), ("b", 1), ("R", "n-2")],
        internal={"R": FB},
        pairs={("a", "R"): FB, ("b", "R"): FB, ("a", "b"): KEEP},
        boundary={"R": FR},
        n=n,
        notes="V_R = {a,b} + R spans a red K_n; every V_R edge but ab turns blue; R-Outside red.",
    )
    _assume_clique(spec, ["a", "b", "R"], RED, {"a", "b"})
    return spec


def lemma3_stage2(n: int) -> GadgetSpec:
    # V_R, W_R red K_n's with V_R & W_R = {a, b}; c, d in W_R - V_R
    spec = GadgetSpec(
        "lemma3_stage2",
        classes=[("a", 1), ("b", 1), ("c", 1), ("d", 1), ("W_core", "n-4"), ("V_rest", "n-2")],
        internal={"W_core": FB, "V_rest": KEEP},
        pairs={
            ("W_core", "a"): FB,
            ("W_core", "b"): FB,
            ("W_core", "c"): FB,
            ("W_core", "d"): FB,
            ("W_core", "V_rest"): FR,
            ("a", "V_rest"): FB,
            ("b", "V_rest"): FB,
            ("c", "V_rest"): FR,
            ("d", "V_rest"): FR,
            ("a", "b"): FB,
            ("a", "d"): FB,
            ("b", "c"): FB,
            ("b", "d"): FB,
            ("c", "d"): FB,
            ("a", "c"): KEEP,
        },
        boundary={"W_core": FR, "a": FR, "b": FR, "d": FR, "c": KEEP, "V_rest": KEEP},
        n=n,
        notes="V_R = {a,b} + V_rest, W_R = {a,b,c,d} + W_core, both red K_n; ac stays red.",
    )
    _assume_clique(spec, ["a", "b", "V_rest"], RED, {"a", "b"})
    _assume_clique(spec, ["a", "b", "c", "d", "W_core"], RED, {"a", "b", "c", "d"})
    return spec


def theorem1_final(n: int, variant: str = "disjoint") -> GadgetSpec:
    """Final recolouring around W_R (inside the red K_n V_R) and W_B (inside the blue K_n V_B).

    ``intersect``: V_R and V_B share one vertex, which sits in W_B; then
    |W_R| = n-3.  The W_R-W_B edges follow the explicit matrix (for n = 4 this
    is one red and one blue edge), which takes precedence over the blanket
    "W_R to V_R is blue" rule for the shared vertex.
    """
    if variant not in VARIANTS:
        raise GadgetError(f"variant must be one of {VARIANTS}")
    wr = "n-2" if variant == "disjoint" else "n-3"
    spec = GadgetSpec(
        f"theorem1_final[{variant}]",
        classes=[("W_R", wr), ("W_B", "n-2"), ("x_R", 1), ("y_R", 1), ("x_B", 1), ("y_B", 1)],
        internal={"W_R": FB, "W_B": FR},
        pairs={
            ("W_R", "x_R"): FB,
            ("W_R", "y_R"): FB,
            ("W_R", "x_B"): FR,
            ("W_R", "y_B"): FR,
            ("W_B", "x_B"): FR,
            ("W_B", "y_B"): FR,
            ("W_B", "x_R"): FB,
            ("W_B", "y_R"): FB,
        },
        boundary={"W_R": FR, "W_B": FB},
        n=n,
    )
    rows = spec.sizes(n)["W_R"]
    cols = spec.sizes(n)["W_B"]
    spec.set_rule("W_R", "W_B", Mixed.alternating(rows, cols))
    _assume_clique(spec, ["W_R", "x_R", "y_R"], RED, {"x_R", "y_R"})
    _assume_clique(spec, ["W_B", "x_B", "y_B"], BLUE, {"x_B", "y_B"})
    return spec


def t2_first() -> GadgetSpec:
    spec = GadgetSpec(
        "t2_first",
        classes=[("x_R", 1), ("y_R", 1), ("z_R", 1)],
        pairs={("x_R", "y_R"): FB, ("x_R", "z_R"): FB, ("y_R", "z_R"): KEEP},
        boundary={"x_R": FR},
        n=3,
        notes="V_R = {x_R, y_R, z_R} spans a red triangle.",
    )
    _assume_clique(spec, ["x_R", "y_R", "z_R"], RED, {"x_R", "y_R", "z_R"})
    return spec


def t2_path() -> GadgetSpec:
    spec = GadgetSpec(
        "t2_path",
        classes=[("x_R", 1), ("y_R", 1), ("z_R", 1), ("v_R", 1)],
        pairs={
            ("x_R", "z_R"): FR,
            ("x_R", "v_R"): FR,
            ("y_R", "v_R"): FR,
            ("z_R", "v_R"): FB,
            ("y_R", "z_R"): FB,
            ("x_R", "y_R"): FB,
        },
        boundary={"y_R": FR, "z_R": FR},
        n=3,
        notes="Red triangles x_R y_R z_R and v_R y_R z_R; path z_R x_R v_R y_R red, rest of the K_4 blue.",
    )
    _assume_clique(spec, ["x_R", "y_R", "z_R"], RED, set(spec.class_names))
    _assume_clique(spec, ["v_R", "y_R", "z_R"], RED, set(spec.class_names))
    return spec


def builtin_gadget(name: str, n: Optional[int] = None, variant: str = "disjoint") -> GadgetSpec:
    if name in ("t2_first", "t2_path"):
        if n not in (None, 3):
            raise GadgetError(f"{name} is defined for n = 3 only")
        return t2_first() if name == "t2_first" else t2_path()
    if name not in BUILTIN_NAMES:
        raise GadgetError(f"unknown gadget {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    if n is None or n < 4:
        raise GadgetError(f"{name} needs n >= 4")
    if name == "lemma3_stage1":
        return lemma3_stage1(n)
    if name == "lemma3_stage2":
        return lemma3_stage2(n)
    return theorem1_final(n, variant)


# conclusions -----------------------------------------------------------------

def conclusions_for(name: str, n: int, variant: str = "disjoint") -> list[ConsequenceClass]:
    base = name.split("[")[0]
    if base == "lemma1":
        vclasses = ("V_R", "V_B", "V'", "x", "y", "x_R", "y_R", "x_B", "y_B")
        others = [c for c in vclasses if c not in ("x", "y", "V'")]

        def only(cls: str):
            rest = [c for c in vclasses if c != cls]
            return lambda p: p.get(cls, 0) == 1 and all(p.get(c, 0) == 0 for c in rest)

        return [
            ConsequenceClass("original mono K_{n-1} meeting V in {x}", size=n - 1, where=only("x")),
            ConsequenceClass("original mono K_{n-1} meeting V in {y}", size=n - 1, where=only("y")),
            ConsequenceClass(
                "original mono K_{n-1} meeting V inside V'", size=n - 1, where=avoiding(*others, "x", "y")
            ),
        ]
    if base == "lemma3_stage1":
        return [
            ConsequenceClass("red K_{n-1} off V_R: red K_n+K_{n-1}", RED, n - 1, avoiding("a", "b", "R")),
            ConsequenceClass(
                "original red K_n meeting V_R in exactly {a,b}: contradicts choice of ab",
                RED,
                n,
                lambda p: p.get("a", 0) == 1 and p.get("b", 0) == 1 and p.get("R", 0) == 0,
            ),
            ConsequenceClass("original blue K_n", BLUE, n),
        ]
    if base == "lemma3_stage2":
        return [
            ConsequenceClass(
                "red K_{n-1} off W_R: red K_n+K_{n-1}", RED, n - 1, avoiding("a", "b", "c", "d", "W_core")
            ),
            ConsequenceClass("red K_{n-1} off V_R: red K_n+K_{n-1}", RED, n - 1, avoiding("a", "b", "V_rest")),
            ConsequenceClass("original blue K_n", BLUE, n),
        ]
    if base == "theorem1_final":
        red_side = ("W_R", "x_R", "y_R") + (("W_B",) if variant == "intersect" else ())
        return [
            ConsequenceClass("original mono K_n missing W_R+W_B: contradicts choice", None, n, avoiding("W_R", "W_B")),
            ConsequenceClass("red K_{n-1} off V_R: red K_n+K_{n-1}", RED, n - 1, avoiding(*red_side)),
            ConsequenceClass("blue K_{n-1} off V_B: blue K_n+K_{n-1}", BLUE, n - 1, avoiding("W_B", "x_B", "y_B")),
        ]
    if base == "t2_first":
        return [
            ConsequenceClass("original blue K_3", BLUE, 3),
            ConsequenceClass("red K_2 off V_R: red K_3+K_2", RED, 2, avoiding("x_R", "y_R", "z_R")),
            ConsequenceClass(
                "red K_3 on y_R z_R and one new vertex: go to t2_path",
                RED,
                None,
                exactly(y_R=1, z_R=1, Outside=1),
            ),
        ]
    if base == "t2_path":
        return [
            ConsequenceClass("original blue K_3", BLUE, 3),
            ConsequenceClass("red K_2 off {x_R,y_R,z_R}: red K_3+K_2", RED, 2, avoiding("x_R", "y_R", "z_R")),
            ConsequenceClass("red K_2 off {v_R,y_R,z_R}: red K_3+K_2", RED, 2, avoiding("v_R", "y_R", "z_R")),
        ]
    if base == "t2_5v":
        return [
            ConsequenceClass("red K_2 off V_R: red K_3+K_2", RED, 2, avoiding("x", "y_R", "z_R")),
            ConsequenceClass("blue K_2 off V_B: blue K_3+K_2", BLUE, 2, avoiding("x", "y_B", "z_B")),
            ConsequenceClass(
                "y_R, z_R share an outside neighbour: contradicts disjoint neighbourhoods",
                RED,
                None,
                exactly(y_R=1, z_R=1, Outside=1),
            ),
            ConsequenceClass(
                "y_B, z_B share an outside neighbour: contradicts disjoint neighbourhoods",
                BLUE,
                None,
                exactly(y_B=1, z_B=1, Outside=1),
            ),
        ]
    if base in ("t2_k62missing", "t2_k6missing"):
        out = [
            ConsequenceClass("red K_2 off V_R: red K_3+K_2", RED, 2, avoiding("x_R", "y_R", "z_R")),
            ConsequenceClass("blue K_2 off V_B: blue K_3+K_2", BLUE, 2, avoiding("x_B", "y_B", "z_B")),
        ]
        if base == "t2_k6missing":
            out.append(
                ConsequenceClass(
                    "one outside vertex w: settled by the w-extension check",
                    None,
                    None,
                    lambda p: p.get(OUTSIDE, 0) == 1,
                    deferred=True,
                )
            )
        return out
    if base == "cor_small_k4":
        return [ConsequenceClass("two vertices outside V: edge in G-V", None, 2, avoiding("a", "b", "c", "d"))]
    raise GadgetError(f"no conclusion classes for {name!r}")


def clique_size_for(name: str, n: int) -> int:
    base = name.split("[")[0]
    return 3 if base.startswith("t2_") or base == "cor_small_k4" else n


def certify(spec: GadgetSpec, n: Optional[int] = None, variant: Optional[str] = None) -> CaseReport:
    """Case analysis of ``spec`` against the conclusion classes of its construction."""
    n = spec.n if n is None else n
    if variant is None:
        variant = "intersect" if "intersect" in spec.name else "disjoint"
    return analyze_gadget_cases(spec, n, clique_size_for(spec.name, n), conclusions_for(spec.name, n, variant))


def benign_flips(spec: GadgetSpec, n: Optional[int] = None) -> list[tuple[str, str]]:
    """Force slots whose colour can be flipped without breaking certification.

    Explicit matrices are not Force rules and are left alone.
    """
    out = []
    for a, b in spec.force_slots():
        mutant = spec.copy()
        mutant.set_rule(a, b, spec.rule(a, b).flipped)
        if certify(mutant, n).passed:
            out.append((a, b))
    return out
