"""Bounded checks of the hypotheses on a parabolic submonoid P1 inside P.

P1 is the submonoid generated by a subset of the standard generators.  All
sweeps run over the elements of P1 that lie in the ambient ball.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .lcm import Lcm, ideal_intersection, lcm_set, proven_empty
from .presentations import Ball
from .verdict import Fails, Holds, Inconclusive, Verdict, aggregate


@dataclass(frozen=True)
class ParabolicInclusion:
    ambient: Ball
    subset: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        subset = frozenset(self.subset)
        n = self.ambient.presentation.alphabet_size
        bad = [s for s in subset if not 0 <= s < n]
        if bad:
            raise ValueError(f"generators {bad} are not in the alphabet of size {n}")
        object.__setattr__(self, "subset", subset)

    @cached_property
    def sub(self) -> Ball:
        return self.ambient.restrict(self.subset)

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.sub.parent_index)

    def names(self) -> list[str]:
        return [self.ambient.presentation.names[s] for s in sorted(self.subset)]


def check_closed_under_factorization(inc: ParabolicInclusion) -> Verdict:
    ball = inc.ambient
    members = inc.members
    checked = 0
    for w in sorted(members):
        for x, ys in sorted(ball._quotients[w].items()):
            for y in sorted(ys):
                checked += 1
                if x not in members or y not in members:
                    return Fails({"w": ball.words[w], "x": ball.words[x], "y": ball.words[y]}, ball.radius)
    return Holds(ball.radius, checked)


def _semilattice_certificate(inc: ParabolicInclusion) -> str | None:
    """Every pair in a spherical Artin monoid has a common multiple.  We use
    this only once the ball has exhibited the lcm of the generating set."""
    from .artin import classify

    M = inc.ambient.presentation.coxeter
    if M is None or not inc.subset:
        return None
    sub_type = classify(M.submatrix(sorted(inc.subset)))
    if not sub_type.spherical:
        return None
    sub = inc.sub
    top = lcm_set(sub, sub.generators)
    if not isinstance(top, Lcm):
        return None
    return (
        f"spherical type {'+'.join(sub_type.types)}: semi-lattice, "
        f"generators have lcm {sub.format(top.r)} in the ball"
    )


def _emptiness(ball: Ball, x: int, y: int) -> str:
    if ideal_intersection(ball, (x, y)):
        return "nonempty"
    if proven_empty(ball, x, y) is not None:
        return "proven_empty"
    return "empty_up_to"


def check_preserves_orthogonality(inc: ParabolicInclusion) -> Verdict:
    """Compare emptiness of xP1 ∩ yP1 and xP ∩ yP for every pair in P1.

    Agreement only counts when both sides are certified; two bounded
    emptinesses give Inconclusive for the pair.
    """
    sub, ball = inc.sub, inc.ambient
    semilattice = _semilattice_certificate(inc)
    items = []
    for x in sub:
        for y in range(x, len(sub)):
            inner = "nonempty" if semilattice else _emptiness(sub, x, y)
            px, py = sub.parent_index[x], sub.parent_index[y]
            outer = "nonempty" if inner == "nonempty" else _emptiness(ball, px, py)
            if inner == outer and inner != "empty_up_to":
                items.append(Holds(ball.radius, 1))
            elif outer == "proven_empty" and inner == "empty_up_to":
                # P1-side ideal sits inside the P-side one
                items.append(Holds(ball.radius, 1))
            elif {inner, outer} == {"proven_empty", "nonempty"}:
                return Fails({
                    "x": sub.words[x], "y": sub.words[y],
                    "submonoid": inner, "ambient": outer,
                }, ball.radius)
            else:
                items.append(Inconclusive(
                    ball.radius,
                    f"{sub.format(x)}, {sub.format(y)}: submonoid {inner}, ambient {outer}",
                ))
    return aggregate(items, ball.radius)


def check_respects_lcm(inc: ParabolicInclusion) -> Verdict:
    """Check xP ∩ yP = (xP1 ∩ yP1)P for every pair in P1, intersected with the ball.

    Any w in (xP1 ∩ yP1)P of length <= radius factors as z.u with z in
    xP1 ∩ yP1 and |z| <= radius, so the right-hand side restricted to the
    ball is the union of zP over the z found in the ball.  The comparison
    is therefore exact up to the radius.
    """
    sub, ball = inc.sub, inc.ambient
    checked = 0
    for x in sub:
        for y in range(x, len(sub)):
            px, py = sub.parent_index[x], sub.parent_index[y]
            lhs = ball.multiples[px] & ball.multiples[py]
            rhs = set()
            for z in ideal_intersection(sub, (x, y)):
                rhs |= ball.multiples[sub.parent_index[z]]
            checked += 1
            if lhs != rhs:
                extra = sorted(lhs ^ rhs)[0]
                return Fails({
                    "x": sub.words[x], "y": sub.words[y], "element": ball.words[extra],
                    "in": "ambient only" if extra in lhs else "submonoid only",
                }, ball.radius)
    return Holds(ball.radius, checked)


def parabolic_inclusion(ball: Ball, subset: Iterable[int]) -> ParabolicInclusion:
    return ParabolicInclusion(ball, frozenset(subset))
