"""Set-size bookkeeping for the places where the big recolouring lemma is invoked.

Each invocation is instantiated with concrete integer vertex sets for every
overlap pattern the surrounding argument allows, then the lemma's
preconditions (2n <= |V| <= 3n-3, |V_0| <= 2n-2, V_0 inside V, x and y
distinct in V minus V_0) and the sizes stated in the text are checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .spec import GadgetError


@dataclass
class Check:
    claim: str
    instance: str
    holds: bool


@dataclass
class Invocation:
    name: str
    config: str
    V: frozenset
    V0: frozenset
    x: int
    y: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {
            "invocation": self.name,
            "config": self.config,
            "|V|": len(self.V),
            "|V_0|": len(self.V0),
            "passed": self.passed,
            "checks": [{"claim": c.claim, "instance": c.instance, "holds": c.holds} for c in self.checks],
        }


@dataclass
class ScenarioReport:
    n: int
    invocations: list[Invocation]

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.invocations)

    def to_json(self) -> dict:
        return {"n": self.n, "passed": self.passed, "invocations": [i.to_json() for i in self.invocations]}


def _preconditions(inv: Invocation, n: int):
    v, v0 = len(inv.V), len(inv.V0)
    rest = inv.V - inv.V0
    inv.checks += [
        Check("2n <= |V| <= 3n-3", f"{2 * n} <= {v} <= {3 * n - 3}", 2 * n <= v <= 3 * n - 3),
        Check("|V_0| <= 2n-2", f"{v0} <= {2 * n - 2}", v0 <= 2 * n - 2),
        Check("V_0 subset of V", f"{len(inv.V0 - inv.V)} vertices of V_0 outside V", inv.V0 <= inv.V),
        Check("x, y in V \\ V_0, x != y", f"x={inv.x}, y={inv.y}, |V \\ V_0|={len(rest)}",
              inv.x in rest and inv.y in rest and inv.x != inv.y),
    ]


def _stated(inv: Invocation, claim: str, lhs: int, op: str, rhs: int):
    ok = {"<=": lhs <= rhs, "=": lhs == rhs}[op]
    inv.checks.append(Check(claim, f"{lhs} {op} {rhs}", ok))


class _Fresh:
    def __init__(self):
        self.next = 0

    def take(self, k: int) -> list[int]:
        out = list(range(self.next, self.next + k))
        self.next += k
        return out


def _lemma4(n: int) -> list[Invocation]:
    out = []
    # a red K_{n+1} and a blue K_n share at most one vertex
    for overlap in (0, 1):
        f = _Fresh()
        vr = f.take(n + 1)
        vb = vr[:overlap] + f.take(n - overlap)
        V = frozenset(vr) | frozenset(vb)
        rest = [v for v in vr if v not in vb]
        V0 = frozenset(vb) | frozenset(rest[: 2 * n - 2 - n])
        x, y = sorted(V - V0)[:2]
        inv = Invocation("lemma4", f"|V_R & V_B| = {overlap}", V, V0, x, y)
        _preconditions(inv, n)
        _stated(inv, "|V| <= 2n+1", len(V), "<=", 2 * n + 1)
        _stated(inv, "V_B inside V_0, |V_0| = 2n-2", len(V0) if set(vb) <= V0 else -1, "=", 2 * n - 2)
        out.append(inv)
    return out


def _two_red(f: _Fresh, n: int):
    vr = f.take(n)
    vr2 = vr[:2] + f.take(n - 2)
    return vr, vr2


def _lemma5_first(n: int) -> list[Invocation]:
    """V_B meets V_R (in one vertex); V_R and V_R' share exactly two vertices."""
    out = []
    for config in ("V_B meets V_R & V_R'", "V_B meets V_R only", "V_B meets V_R and V_R' separately"):
        f = _Fresh()
        vr, vr2 = _two_red(f, n)
        only_r, only_r2 = vr[2:], vr2[2:]
        if config == "V_B meets V_R & V_R'":
            shared = [vr[0]]
        elif config == "V_B meets V_R only":
            shared = [only_r[-1]]
        else:
            shared = [only_r[-1], only_r2[-1]]
        vb = shared + f.take(n - len(shared))
        x = next(v for v in only_r if v not in vb)
        y = next(v for v in only_r2 if v not in vb)
        V = frozenset(vr) | frozenset(vr2) | frozenset(vb)
        V0 = (frozenset(vr) | frozenset(vb)) - {x}
        inv = Invocation("lemma5_first", config, V, V0, x, y)
        _preconditions(inv, n)
        _stated(inv, "|V| <= 3n-3", len(V), "<=", 3 * n - 3)
        _stated(inv, "|V_0| <= 2n-2", len(V0), "<=", 2 * n - 2)
        out.append(inv)
    return out


def _lemma5_second(n: int) -> Invocation:
    f = _Fresh()
    vr, vr2 = _two_red(f, n)
    vb = f.take(n)
    x, y = vr[2], vr[3]
    z = vr2[2]
    W = frozenset(vr2) - frozenset(vr) - {z}
    V = frozenset(vb) | frozenset(vr) | W
    V0 = (frozenset(vr) | frozenset(vb)) - {x, y}
    inv = Invocation("lemma5_second", "V_B disjoint from V_R | V_R'", V, V0, x, y)
    _preconditions(inv, n)
    _stated(inv, "|V| <= 3n-3", len(V), "<=", 3 * n - 3)
    _stated(inv, "|V_0| = 2n-2", len(V0), "=", 2 * n - 2)
    return inv


def _lemma5_third(n: int) -> Invocation:
    f = _Fresh()
    vr, vr2 = _two_red(f, n)
    vb = f.take(n)
    x, y = vr[2], vr[3]
    z = vr2[2]
    V0 = (frozenset(vr) | frozenset(vb)) - {x, y}
    V = (frozenset(vr) | frozenset(vr2) | frozenset(vb)) - {x}
    # the lemma is applied with its two special vertices set to y and z
    inv = Invocation("lemma5_third", "V_B disjoint from V_R | V_R'", V, V0, y, z)
    _preconditions(inv, n)
    _stated(inv, "|V| = 3n-3", len(V), "=", 3 * n - 3)
    _stated(inv, "|V_0| = 2n-2", len(V0), "=", 2 * n - 2)
    return inv


def scenario_arithmetic(n: int) -> ScenarioReport:
    if n < 4:
        raise GadgetError("scenario arithmetic needs n >= 4")
    invs = _lemma4(n) + _lemma5_first(n) + [_lemma5_second(n), _lemma5_third(n)]
    return ScenarioReport(n, invs)
