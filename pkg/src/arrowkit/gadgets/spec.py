"""Class-level recolouring rules and their application to concrete colourings.

A gadget partitions some vertices into named classes; everything else is the
implicit ``Outside`` class.  Each class has an internal rule and a boundary
rule (edges to Outside), and each unordered pair of classes has a pair rule.
``assume`` records edge colours the surrounding argument already knows in the
original colouring (e.g. "V_R spans a red K_n"); ``absent`` lists class pairs
known to have no edges at all.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from ..graph import BLUE, RED, Colour, Colouring, GraphError

OUTSIDE = "Outside"


class GadgetError(ValueError):
    pass


class Rule(enum.Enum):
    FORCE_RED = "ForceRed"
    FORCE_BLUE = "ForceBlue"
    KEEP = "Keep"

    @property
    def colour(self) -> Optional[Colour]:
        return {Rule.FORCE_RED: RED, Rule.FORCE_BLUE: BLUE}.get(self)

    @property
    def flipped(self) -> "Rule":
        return {Rule.FORCE_RED: Rule.FORCE_BLUE, Rule.FORCE_BLUE: Rule.FORCE_RED}.get(self, self)

    @classmethod
    def force(cls, colour: Colour) -> "Rule":
        return cls.FORCE_RED if colour is RED else cls.FORCE_BLUE


FR, FB, KEEP = Rule.FORCE_RED, Rule.FORCE_BLUE, Rule.KEEP


@dataclass(frozen=True)
class Mixed:
    """Explicit colour matrix between two classes; rows follow the first class of the pair key.

    Entries are RED, BLUE or None (Keep).
    """

    matrix: tuple[tuple[Optional[Colour], ...], ...]

    @classmethod
    def alternating(cls, rows: int, cols: int) -> "Mixed":
        return cls(tuple(tuple(RED if (i + j) % 2 == 0 else BLUE for j in range(cols)) for i in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0]) if self.matrix else 0

    def transposed(self) -> "Mixed":
        r, c = self.shape
        return Mixed(tuple(tuple(self.matrix[i][j] for i in range(r)) for j in range(c)))


PairRule = Union[Rule, Mixed]

_SIZE_RE = re.compile(r"^\s*n\s*(?:([+-])\s*(\d+))?\s*$")


def eval_size(expr: Union[int, str], n: int) -> int:
    if isinstance(expr, int):
        return expr
    if expr.strip().isdigit():
        return int(expr)
    m = _SIZE_RE.match(expr)
    if not m:
        raise GadgetError(f"bad size expression {expr!r}")
    sign, k = m.groups()
    return n + (int(k) if sign == "+" else -int(k) if sign == "-" else 0)


@dataclass
class GadgetSpec:
    name: str
    classes: list[tuple[str, Union[int, str]]]
    internal: dict[str, Rule] = field(default_factory=dict)
    pairs: dict[tuple[str, str], PairRule] = field(default_factory=dict)
    boundary: dict[str, Rule] = field(default_factory=dict)
    assume: dict[tuple[str, str], Colour] = field(default_factory=dict)
    absent: set[tuple[str, str]] = field(default_factory=set)
    n: Optional[int] = None
    notes: str = ""

    def __post_init__(self):
        names = self.class_names
        if len(set(names)) != len(names) or OUTSIDE in names:
            raise GadgetError("class names must be distinct and not 'Outside'")
        norm_pairs = {}
        for (a, b), rule in self.pairs.items():
            key = self.key(a, b)
            if key != (a, b) and isinstance(rule, Mixed):
                rule = rule.transposed()
            norm_pairs[key] = rule
        self.pairs = norm_pairs
        self.assume = {self.key(a, b): c for (a, b), c in self.assume.items()}
        self.absent = {self.key(a, b) for a, b in self.absent}

    @property
    def class_names(self) -> list[str]:
        return [c for c, _ in self.classes]

    def index(self, name: str) -> int:
        if name == OUTSIDE:
            return len(self.classes)
        try:
            return self.class_names.index(name)
        except ValueError:
            raise GadgetError(f"unknown class {name!r}") from None

    def key(self, a: str, b: str) -> tuple[str, str]:
        """Canonical key: classes in declaration order, Outside last, (a, a) for internal."""
        return (a, b) if self.index(a) <= self.index(b) else (b, a)

    def sizes(self, n: int) -> dict[str, int]:
        out = {c: eval_size(s, n) for c, s in self.classes}
        bad = [c for c, s in out.items() if s < 0]
        if bad:
            raise GadgetError(f"negative class size at n={n}: {bad}")
        return out

    def rule(self, a: str, b: str) -> PairRule:
        """Rule for edges between (or within, if a == b) classes; Outside allowed."""
        if a == b:
            return KEEP if a == OUTSIDE else self.internal.get(a, KEEP)
        if OUTSIDE in (a, b):
            return self.boundary.get(b if a == OUTSIDE else a, KEEP)
        return self.pairs.get(self.key(a, b), KEEP)

    def set_rule(self, a: str, b: str, rule: PairRule):
        if a == b:
            self.internal[a] = rule
        elif OUTSIDE in (a, b):
            self.boundary[b if a == OUTSIDE else a] = rule
        else:
            key = self.key(a, b)
            if key != (a, b) and isinstance(rule, Mixed):
                rule = rule.transposed()
            self.pairs[key] = rule

    def assumed(self, a: str, b: str) -> Optional[Colour]:
        return self.assume.get(self.key(a, b))

    def is_absent(self, a: str, b: str) -> bool:
        return self.key(a, b) in self.absent

    def force_slots(self) -> list[tuple[str, str]]:
        """Every (class, class) slot, Outside included, currently holding a Force rule."""
        names = self.class_names + [OUTSIDE]
        slots = []
        for i, a in enumerate(names):
            for b in names[i:]:
                if a == b == OUTSIDE:
                    continue
                r = self.rule(a, b)
                if isinstance(r, Rule) and r is not KEEP:
                    slots.append((a, b))
        return slots

    def copy(self) -> "GadgetSpec":
        return from_json(to_json(self))


# application ---------------------------------------------------------------

def apply_gadget(c: Colouring, spec: GadgetSpec, placement: dict[str, frozenset], n: int) -> Colouring:
    if not c.is_total:
        raise GadgetError("apply_gadget needs a total colouring")
    sizes = spec.sizes(n)
    owner: dict[int, tuple[str, int]] = {}
    for name in spec.class_names:
        members = sorted(placement.get(name, ()))
        if len(members) != sizes[name]:
            raise GadgetError(f"class {name} needs {sizes[name]} vertices at n={n}, got {len(members)}")
        for pos, v in enumerate(members):
            if not 0 <= v < c.graph.n:
                raise GraphError(f"vertex {v} out of range")
            if v in owner:
                raise GadgetError(f"vertex {v} placed in both {owner[v][0]} and {name}")
            owner[v] = (name, pos)
    extra = set(placement) - set(spec.class_names)
    if extra:
        raise GadgetError(f"placement names unknown classes {sorted(extra)}")

    out = []
    for (u, v), col in zip(c.graph.edges(), c.colours):
        cu, iu = owner.get(u, (OUTSIDE, 0))
        cv, iv = owner.get(v, (OUTSIDE, 0))
        rule = spec.rule(cu, cv)
        if isinstance(rule, Mixed):
            if spec.key(cu, cv) != (cu, cv):
                iu, iv = iv, iu
            entry = rule.matrix[iu][iv]
            out.append(col if entry is None else entry)
        else:
            out.append(rule.colour or col)
    return Colouring(c.graph, tuple(out))


# serialization -------------------------------------------------------------

def _col(c: Optional[Colour]) -> Optional[str]:
    return None if c is None else c.value


def to_json(spec: GadgetSpec) -> dict:
    classes = []
    for name, size in spec.classes:
        classes.append(
            {
                "name": name,
                "size": size,
                "internal": spec.internal.get(name, KEEP).value,
                "boundary": spec.boundary.get(name, KEEP).value,
            }
        )
    pairs = []
    for (a, b), rule in sorted(spec.pairs.items(), key=lambda kv: (spec.index(kv[0][0]), spec.index(kv[0][1]))):
        if isinstance(rule, Mixed):
            pairs.append({"a": a, "b": b, "rule": "Mixed", "matrix": [[_col(x) or "K" for x in row] for row in rule.matrix]})
        else:
            pairs.append({"a": a, "b": b, "rule": rule.value})
    return {
        "name": spec.name,
        "n": spec.n,
        "classes": classes,
        "pairs": pairs,
        "assume": [{"a": a, "b": b, "colour": c.value} for (a, b), c in sorted(spec.assume.items())],
        "absent": [list(p) for p in sorted(spec.absent)],
        "notes": spec.notes,
    }


def from_json(data: dict) -> GadgetSpec:
    def parse_entry(x: str) -> Optional[Colour]:
        return None if x == "K" else Colour(x)

    classes = [(c["name"], c["size"]) for c in data["classes"]]
    internal = {c["name"]: Rule(c.get("internal", "Keep")) for c in data["classes"]}
    boundary = {c["name"]: Rule(c.get("boundary", "Keep")) for c in data["classes"]}
    pairs: dict[tuple[str, str], PairRule] = {}
    for p in data.get("pairs", []):
        if p["rule"] == "Mixed":
            pairs[p["a"], p["b"]] = Mixed(tuple(tuple(parse_entry(x) for x in row) for row in p["matrix"]))
        else:
            pairs[p["a"], p["b"]] = Rule(p["rule"])
    return GadgetSpec(
        name=data["name"],
        classes=classes,
        internal=internal,
        pairs=pairs,
        boundary=boundary,
        assume={(a["a"], a["b"]): Colour(a["colour"]) for a in data.get("assume", [])},
        absent={tuple(p) for p in data.get("absent", [])},
        n=data.get("n"),
        notes=data.get("notes", ""),
    )


def dumps(spec: GadgetSpec) -> str:
    return json.dumps(to_json(spec), indent=2)


def loads(text: str) -> GadgetSpec:
    return from_json(json.loads(text))
