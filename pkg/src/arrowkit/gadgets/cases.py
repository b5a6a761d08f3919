"""Mechanized case analysis of a gadget.

A candidate monochromatic clique after recolouring is summarised by its
*profile*: how many vertices it takes from each class (Outside included, with
capacity equal to the clique size).  Force rules and assumed original colours
decide which profiles can be monochromatic in which colour; every feasible
(profile, colour) must then land in one of the supplied consequence classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from ..graph import BLUE, RED, Colour
from .spec import KEEP, OUTSIDE, GadgetError, GadgetSpec, Mixed, Rule

Profile = dict[str, int]


def capped_compositions(caps: Sequence[int], total: int) -> Iterable[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    room = sum(rest)
    for k in range(min(head, total), -1, -1):
        if total - k <= room:
            for tail in capped_compositions(rest, total - k):
                yield (k,) + tail


def count_capped_compositions(caps: Sequence[int], total: int) -> int:
    """Inclusion-exclusion over the parts that overflow their cap."""
    parts = len(caps)
    count = 0
    for r in range(parts + 1):
        for over in combinations(caps, r):
            rest = total - sum(c + 1 for c in over)
            if rest >= 0:
                count += (-1) ** r * comb(rest + parts - 1, parts - 1)
    return count


# colours of slots ------------------------------------------------------------

def _known(spec: GadgetSpec, a: str, b: str) -> Optional[Colour]:
    """Colour an edge of this slot is guaranteed to have after recolouring, if any."""
    rule = spec.rule(a, b)
    if isinstance(rule, Rule) and rule is not KEEP:
        return rule.colour
    if rule is KEEP:
        return spec.assumed(a, b)
    return None


def _preserved(spec: GadgetSpec, a: str, b: str) -> bool:
    """Edges of this slot carry their original colour after recolouring."""
    if a != b and spec.is_absent(a, b):
        return False
    rule = spec.rule(a, b)
    if rule is KEEP:
        return True
    if isinstance(rule, Rule):
        return spec.assumed(a, b) is rule.colour
    return False


def _slots(names: Sequence[str], counts: Sequence[int]):
    used = [(nm, k) for nm, k in zip(names, counts) if k]
    for i, (a, ka) in enumerate(used):
        if ka >= 2:
            yield a, a
        for b, _ in used[i + 1 :]:
            yield a, b


def feasible(spec: GadgetSpec, names: Sequence[str], counts: Sequence[int], colour: Colour) -> bool:
    mixed = []
    for a, b in _slots(names, counts):
        if a != b and spec.is_absent(a, b):
            return False
        rule = spec.rule(a, b)
        if isinstance(rule, Mixed):
            mixed.append(spec.key(a, b))
            continue
        if _known(spec, a, b) is colour.other:
            return False
    if not mixed:
        return True
    # vertex-level choice inside the classes touched by explicit matrices
    cnt = dict(zip(names, counts))
    involved = sorted({c for pair in mixed for c in pair}, key=spec.index)
    sizes = spec.sizes(spec.n) if spec.n is not None else None
    choices = []
    for c in involved:
        width = _mixed_width(spec, c, mixed) if sizes is None else sizes[c]
        choices.append(list(combinations(range(width), cnt[c])))
    for pick in product(*choices):
        chosen = dict(zip(involved, pick))
        if all(
            spec.pairs[a, b].matrix[i][j] is not colour.other
            for a, b in mixed
            for i in chosen[a]
            for j in chosen[b]
        ):
            return True
    return False


def _mixed_width(spec: GadgetSpec, c: str, mixed) -> int:
    for a, b in mixed:
        m = spec.pairs[a, b]
        if a == c:
            return m.shape[0]
        if b == c:
            return m.shape[1]
    raise GadgetError(f"class {c} not in a mixed pair")


# consequence classes ----------------------------------------------------------

@dataclass
class ConsequenceClass:
    """A conclusion a mono clique profile may witness.

    With ``size`` set, the predicate asks for a sub-profile of that many
    vertices whose edges all keep their original colour, restricted by
    ``where``; the sub-clique then is a mono clique of the original colouring.
    Without ``size`` the predicate is ``where`` on the whole profile.
    """

    name: str
    colour: Optional[Colour] = None
    size: Optional[int] = None
    where: Callable[[Profile], bool] = lambda prof: True
    deferred: bool = False

    def holds(self, spec: GadgetSpec, profile: Profile, colour: Colour) -> bool:
        if self.colour is not None and colour is not self.colour:
            return False
        if self.size is None:
            return self.where(profile)
        names = list(profile)
        caps = [profile[c] for c in names]
        for sub in capped_compositions(caps, self.size):
            sp = dict(zip(names, sub))
            if self.where(sp) and all(_preserved(spec, a, b) for a, b in _slots(names, sub)):
                return True
        return False


def avoiding(*classes: str) -> Callable[[Profile], bool]:
    return lambda prof: all(prof.get(c, 0) == 0 for c in classes)


def exactly(**counts: int) -> Callable[[Profile], bool]:
    def pred(prof: Profile) -> bool:
        return all(prof.get(c, 0) == counts.get(c, 0) for c in set(prof) | set(counts))

    return pred


@dataclass
class CaseRow:
    profile: Profile
    red: object
    blue: object


@dataclass
class CaseReport:
    gadget: str
    n: int
    clique_size: int
    profiles_total: int
    profiles_feasible: int
    rows: list[CaseRow] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self, rows: bool = True) -> dict:
        out = {
            "gadget": self.gadget,
            "n": self.n,
            "clique_size": self.clique_size,
            "profiles_total": self.profiles_total,
            "profiles_feasible": self.profiles_feasible,
            "passed": self.passed,
            "violations": self.violations,
        }
        if rows:
            out["rows"] = [{"profile": r.profile, "red": r.red, "blue": r.blue} for r in self.rows]
        return out


def analyze_gadget_cases(
    spec: GadgetSpec,
    n: int,
    clique_size: int,
    conclusions: Sequence[ConsequenceClass],
) -> CaseReport:
    if clique_size < 3:
        raise GadgetError("clique_size must be at least 3")
    sizes = spec.sizes(n)
    names = spec.class_names + [OUTSIDE]
    caps = [sizes[c] for c in spec.class_names] + [clique_size]
    for (a, b), rule in spec.pairs.items():
        if isinstance(rule, Mixed) and rule.shape != (sizes[a], sizes[b]):
            raise GadgetError(f"matrix for {a}-{b} is {rule.shape}, classes are {sizes[a]}x{sizes[b]} at n={n}")
    report = CaseReport(spec.name, n, clique_size, 0, 0)
    saved_n = spec.n
    spec.n = n
    try:
        for counts in capped_compositions(caps, clique_size):
            report.profiles_total += 1
            prof = {c: k for c, k in zip(names, counts) if k}
            verdicts = {}
            for colour in (RED, BLUE):
                if not feasible(spec, names, counts, colour):
                    verdicts[colour] = "infeasible"
                    continue
                hits = [cc.name for cc in conclusions if cc.holds(spec, prof, colour)]
                verdicts[colour] = hits or "VIOLATION"
                if not hits:
                    report.violations.append({"profile": prof, "colour": colour.value})
            if any(v != "infeasible" for v in verdicts.values()):
                report.profiles_feasible += 1
            report.rows.append(CaseRow(prof, verdicts[RED], verdicts[BLUE]))
    finally:
        spec.n = saved_n
    return report
