"""Principal right ideals, their intersections, and least common multiples in a ball.

Because units are trivial, a least common multiple is the unique minimum of
the divisibility order on pP ∩ qP.  Inside a ball we can only ever see the
part of the ideal of length <= radius, so results are certificates:

* ``Lcm``            the unique shortest common multiple divides every common
                     multiple in the ball;
* ``ProvenEmpty``    emptiness follows from a rule that does not depend on the
                     radius (two Artin generators with m = inf, after cancelling
                     a common left factor);
* ``EmptyUpTo``      no common multiple of length <= radius;
* ``InconclusiveUpTo`` common multiples exist but no single one generates them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Union

from .presentations import INF, Ball, ElementLike, Word
from .verdict import Fails, Holds, Inconclusive, Verdict


@dataclass(frozen=True)
class Lcm:
    r: int
    word: Word

    kind = "lcm"
    resolved = True

    def to_json(self, ball: Ball | None = None) -> dict[str, Any]:
        w = ball.presentation.format_word(self.word) if ball else list(self.word)
        return {"kind": self.kind, "lcm": w}


@dataclass(frozen=True)
class ProvenEmpty:
    reason: str
    prefix: Word
    generators: tuple[int, int]

    kind = "proven_empty"
    resolved = True

    def to_json(self, ball: Ball | None = None) -> dict[str, Any]:
        fmt = ball.presentation.format_word if ball else list
        return {
            "kind": self.kind,
            "reason": self.reason,
            "common_prefix": fmt(self.prefix),
            "generators": [fmt((s,)) for s in self.generators],
        }


@dataclass(frozen=True)
class EmptyUpTo:
    bound: int

    kind = "empty_up_to"
    resolved = False

    def to_json(self, ball: Ball | None = None) -> dict[str, Any]:
        return {"kind": self.kind, "bound": self.bound}


@dataclass(frozen=True)
class InconclusiveUpTo:
    bound: int
    minimal: tuple[Word, ...] = ()
    detail: str = ""

    kind = "inconclusive_up_to"
    resolved = False

    def to_json(self, ball: Ball | None = None) -> dict[str, Any]:
        fmt = ball.presentation.format_word if ball else list
        return {
            "kind": self.kind,
            "bound": self.bound,
            "minimal": [fmt(w) for w in self.minimal],
            "detail": self.detail,
        }


LcmResult = Union[Lcm, ProvenEmpty, EmptyUpTo, InconclusiveUpTo]

EMPTY_RULE = "Artin generators with m = inf have no common multiple; common left factor cancelled"


def ideal_intersection(ball: Ball, xs: Iterable[ElementLike]) -> frozenset:
    """Indices of ball elements divisible on the left by every element of ``xs``."""
    out = None
    for x in xs:
        m = ball.multiples[ball.index(x)]
        out = m if out is None else out & m
        if not out:
            break
    return frozenset(range(len(ball))) if out is None else out


def proven_empty(ball: Ball, x: ElementLike, y: ElementLike) -> ProvenEmpty | None:
    """Certify xP ∩ yP = ∅ by the m = inf rule, or return None.

    If x = p.x' and y = p.y' then xP ∩ yP = p(x'P ∩ y'P) by left
    cancellation, and x'P ∩ y'P sits inside sP ∩ tP for any generators
    s | x', t | y'.  In an Artin monoid sP ∩ tP is empty when m(s, t) = inf.
    """
    M = ball.presentation.coxeter
    if M is None:
        return None
    x, y = ball.index(x), ball.index(y)
    gens = {ball.words[g][0]: g for g in ball.generators}
    for p in sorted(ball.divisors[x] & ball.divisors[y]):
        xq = ball.quotient(p, x)
        yq = ball.quotient(p, y)
        sx = sorted(s for s, g in gens.items() if g in ball.divisors[xq])
        sy = sorted(t for t, g in gens.items() if g in ball.divisors[yq])
        for s, t in sorted(itertools.product(sx, sy), key=lambda st: tuple(sorted(st))):
            if s != t and M[s, t] == INF:
                return ProvenEmpty(EMPTY_RULE, ball.words[p], tuple(sorted((s, t))))
    return None


def _certify(ball: Ball, common: frozenset) -> LcmResult:
    shortest = min(ball.lengths[q] for q in common)
    minimal = sorted(q for q in common if ball.lengths[q] == shortest)
    if len(minimal) > 1:
        return InconclusiveUpTo(
            ball.radius, tuple(ball.words[q] for q in minimal),
            "several shortest common multiples",
        )
    r = minimal[0]
    stray = common - ball.multiples[r]
    if stray:
        q = min(stray)
        return InconclusiveUpTo(
            ball.radius, (ball.words[r],),
            f"common multiple {ball.format(q)} is not a multiple of {ball.format(r)}",
        )
    return Lcm(r, ball.words[r])


def lcm(ball: Ball, x: ElementLike, y: ElementLike) -> LcmResult:
    common = ideal_intersection(ball, (x, y))
    if common:
        return _certify(ball, common)
    proof = proven_empty(ball, x, y)
    return proof if proof is not None else EmptyUpTo(ball.radius)


def lcm_set(ball: Ball, F: Iterable[ElementLike]) -> LcmResult:
    F = sorted({ball.index(x) for x in F})
    if not F:
        raise ValueError("lcm_set needs a nonempty set")
    if len(F) == 1:
        return Lcm(F[0], ball.words[F[0]])
    common = ideal_intersection(ball, F)
    if common:
        return _certify(ball, common)
    for x, y in itertools.combinations(F, 2):
        proof = proven_empty(ball, x, y)
        if proof is not None:
            return proof
    return EmptyUpTo(ball.radius)


def verify_right_lcm(ball: Ball) -> Verdict:
    """Sweep all pairs of the ball for the right-LCM property.

    A pair only counts as a failure when two distinct shortest common
    multiples are themselves provably orthogonal.
    """
    unresolved = 0
    reason = ""
    checked = 0
    for x in ball:
        for y in range(x, len(ball)):
            res = lcm(ball, x, y)
            if not isinstance(res, InconclusiveUpTo):
                checked += 1
                continue
            if len(res.minimal) > 1:
                m1, m2 = res.minimal[:2]
                proof = lcm(ball, m1, m2)
                if isinstance(proof, ProvenEmpty):
                    return Fails({
                        "x": ball.words[x], "y": ball.words[y],
                        "minimal": [m1, m2], "reason": proof.reason,
                    }, ball.radius)
            unresolved += 1
            reason = reason or f"{ball.format(x)}, {ball.format(y)}: {res.detail}"
    if unresolved:
        return Inconclusive(ball.radius, reason, unresolved)
    return Holds(ball.radius, checked)
