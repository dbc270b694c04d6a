"""Matrix representations of a monoid: the truncated left regular
representation, Nica covariance, the diagonal expectation, and the
inclusion-exclusion functional Z(F).

Scalars are real rationals, so the adjoint of a matrix is its transpose.

The regular representation lives on the span of the ball, one basis vector
per element.  lambda_L(s) sends the basis vector of q to that of s.q when
|s| + |q| <= L and kills it otherwise.  Range projections lambda(x)lambda(x)^T
are exact (the projection onto xP inside the ball); identities that move
basis vectors are only compared on columns q far enough from the boundary
("safe columns": |q| + D <= L where D is the longest positive word involved).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .inclusions import ParabolicInclusion, check_closed_under_factorization
from .lcm import Lcm, ProvenEmpty, lcm, lcm_set
from .matrices import RationalMatrix, psd
from .presentations import Ball, ElementLike, HomogeneousPresentation, Word
from .verdict import Fails, Holds, Inconclusive, Verdict, aggregate


class RelationError(ValueError):
    """A representation does not respect a defining relation."""


class UnresolvedLcm(RuntimeError):
    """Some join needed by Z(F) could not be certified inside the ball."""

    def __init__(self, subset, result):
        super().__init__(f"lcm of {subset} is not resolved in the ball: {result.kind}")
        self.subset = subset
        self.result = result


class HypothesisError(ValueError):
    """A construction was asked for without its hypothesis being verified."""


class Representation:
    """Matrices assigned to the generators of a presentation."""

    def __init__(self, presentation: HomogeneousPresentation, generators: Sequence[RationalMatrix],
                 label: str = "", check: bool = True):
        if len(generators) != presentation.alphabet_size:
            raise ValueError(f"expected {presentation.alphabet_size} generator matrices, got {len(generators)}")
        dims = {g.shape for g in generators}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise ValueError("generator matrices must be square and of equal size")
        self.presentation = presentation
        self.generators = tuple(generators)
        self.dim = generators[0].rows if generators else 0
        self.label = label
        self._cache: dict[Word, RationalMatrix] = {}
        if check:
            self.check_relations()

    def word(self, w: Sequence[int]) -> RationalMatrix:
        w = tuple(w)
        if w not in self._cache:
            if not w:
                m = RationalMatrix.identity(self.dim)
            else:
                m = self.word(w[:-1]) @ self.generators[w[-1]] if len(w) > 1 else self.generators[w[0]]
            self._cache[w] = m
        return self._cache[w]

    def element(self, ball: Ball, x: ElementLike) -> RationalMatrix:
        return self.word(ball.word(x))

    def check_relations(self) -> None:
        fmt = self.presentation.format_word
        for u, v in sorted(self.presentation.relations):
            if self.word(u) != self.word(v):
                raise RelationError(f"relation {fmt(u)} = {fmt(v)} is violated")

    @property
    def isometric(self) -> tuple[bool, ...]:
        eye = RationalMatrix.identity(self.dim)
        return tuple(g.T @ g == eye for g in self.generators)

    @property
    def unitary(self) -> tuple[bool, ...]:
        eye = RationalMatrix.identity(self.dim)
        return tuple(g.T @ g == eye and g @ g.T == eye for g in self.generators)

    def is_contractive(self) -> bool:
        eye = RationalMatrix.identity(self.dim)
        return all(psd(eye - g.T @ g) for g in self.generators)

    def safe_columns(self, depth: int) -> range | None:
        """Columns on which identities of word length ``depth`` are exact; None means all."""
        return None


class TruncatedRegularRep(Representation):
    def __init__(self, ball: Ball, generators: Sequence[RationalMatrix]):
        self.ball = ball
        super().__init__(ball.presentation, generators, f"regular(L={ball.radius})", check=False)
        self._elements: dict[int, RationalMatrix] = {}

    def element(self, ball: Ball, x: ElementLike) -> RationalMatrix:
        if ball is not self.ball:
            return super().element(ball, x)
        x = ball.index(x)
        if x not in self._elements:
            n = len(ball)
            data = {}
            for q in ball:
                xq = ball.multiply(x, q)
                if xq is not None:
                    data[xq] = {q: 1}
            self._elements[x] = RationalMatrix(n, n, data)
        return self._elements[x]

    def projection(self, x: ElementLike) -> RationalMatrix:
        """Diagonal projection onto xP inside the ball."""
        x = self.ball.index(x)
        n = len(self.ball)
        return RationalMatrix(n, n, {q: {q: 1} for q in self.ball.multiples[x]})

    def safe_columns(self, depth: int) -> list[int]:
        return [q for q in self.ball if self.ball.lengths[q] + depth <= self.ball.radius]


def build_regular_rep(ball: Ball) -> TruncatedRegularRep:
    n = len(ball)
    gens = []
    for s in range(ball.presentation.alphabet_size):
        data = {}
        for q in ball:
            if ball.lengths[q] + 1 <= ball.radius:
                data[ball.index((s,) + ball.words[q])] = {q: 1}
        if len(data) < sum(1 for q in ball if ball.lengths[q] < ball.radius):
            raise ValueError(f"generator {ball.presentation.names[s]} is not left-cancellative in this ball")
        g = RationalMatrix(n, n, data)
        gens.append(g)
    rep = TruncatedRegularRep(ball, gens)
    for s, g in enumerate(gens):
        inner = RationalMatrix(n, n, {q: {q: 1} for q in ball if ball.lengths[q] < ball.radius})
        assert g.T @ g == inner
        assert g @ g.T == rep.projection((s,))
    return rep


def covariance_items(rep: Representation, ball: Ball,
                     pairs: Iterable[tuple[ElementLike, ElementLike]] | None = None) -> list[tuple[int, int, Verdict]]:
    """Check V_x V_x^T V_y V_y^T = V_r V_r^T (or 0) pair by pair."""
    proj: dict[int, RationalMatrix] = {}

    def P(x):
        if x not in proj:
            v = rep.element(ball, x)
            proj[x] = v @ v.T
        return proj[x]

    out = []
    for x, y in _pairs(ball, pairs):
        res = lcm(ball, x, y)
        if isinstance(res, Lcm):
            rhs = P(res.r)
        elif isinstance(res, ProvenEmpty):
            rhs = RationalMatrix.zeros(rep.dim)
        else:
            out.append((x, y, Inconclusive(ball.radius, f"lcm of {ball.format(x)}, {ball.format(y)}: {res.kind}")))
            continue
        lhs = P(x) @ P(y)
        out.append((x, y, _compare(ball, x, y, lhs, rhs, res)))
    return out


def wick_items(rep: Representation, ball: Ball,
               pairs: Iterable[tuple[ElementLike, ElementLike]] | None = None) -> list[tuple[int, int, Verdict]]:
    """Check V_x^T V_y = V_{z1} V_{z2}^T where z = x z1 = y z2 is the lcm (0 if none)."""
    out = []
    for x, y in _pairs(ball, pairs):
        res = lcm(ball, x, y)
        depth = max(ball.lengths[x], ball.lengths[y])
        if isinstance(res, Lcm):
            z1, z2 = ball.quotient(x, res.r), ball.quotient(y, res.r)
            depth = max(depth, ball.lengths[z1], ball.lengths[z2])
            rhs = rep.element(ball, z1) @ rep.element(ball, z2).T
        elif isinstance(res, ProvenEmpty):
            rhs = RationalMatrix.zeros(rep.dim)
        else:
            out.append((x, y, Inconclusive(ball.radius, f"lcm of {ball.format(x)}, {ball.format(y)}: {res.kind}")))
            continue
        lhs = rep.element(ball, x).T @ rep.element(ball, y)
        cols = rep.safe_columns(depth)
        if cols is not None:
            lhs, rhs = lhs.restrict_columns(cols), rhs.restrict_columns(cols)
        out.append((x, y, _compare(ball, x, y, lhs, rhs, res)))
    return out


def _pairs(ball: Ball, pairs) -> list[tuple[int, int]]:
    if pairs is None:
        return [(x, y) for x in ball for y in range(x, len(ball))]
    return [(ball.index(x), ball.index(y)) for x, y in pairs]


def _compare(ball, x, y, lhs, rhs, res) -> Verdict:
    if lhs == rhs:
        return Holds(ball.radius, 1)
    diff = lhs - rhs
    (i, j), _ = next(diff.items())
    return Fails({
        "x": ball.words[x], "y": ball.words[y],
        "lcm": res.word if isinstance(res, Lcm) else None,
        "entry": [i, j], "lhs": str(lhs[i, j]), "rhs": str(rhs[i, j]),
    }, ball.radius)


def check_covariance(rep: Representation, ball: Ball, pairs=None) -> Verdict:
    return aggregate((v for _, _, v in covariance_items(rep, ball, pairs)), ball.radius)


def check_wick(rep: Representation, ball: Ball, pairs=None) -> Verdict:
    return aggregate((v for _, _, v in wick_items(rep, ball, pairs)), ball.radius)


def diagonal_expectation(A: RationalMatrix) -> RationalMatrix:
    """Compression to the diagonal: the sum over basis vectors z of E_z A E_z."""
    if A.rows != A.cols:
        raise ValueError("diagonal expectation needs a square matrix")
    return RationalMatrix.diagonal(A[i, i] for i in range(A.rows))


def z_functional(rep: Representation, ball: Ball, F: Iterable[ElementLike]) -> RationalMatrix:
    """Sum over subsets U of F of (-1)^|U| T(s_U) T(s_U)^T, with s_U the lcm of U.

    Terms with provably empty lcm vanish.  Raises UnresolvedLcm if some lcm
    is only known up to the radius.
    """
    F = sorted({ball.index(x) for x in F})
    rep.check_relations()
    if not rep.is_contractive():
        raise ValueError("Z(F) needs a contractive representation")
    total = RationalMatrix.identity(rep.dim)
    for k in range(1, len(F) + 1):
        for U in itertools.combinations(F, k):
            res = lcm_set(ball, U)
            if isinstance(res, ProvenEmpty):
                continue
            if not isinstance(res, Lcm):
                raise UnresolvedLcm([ball.format(u) for u in U], res)
            t = rep.element(ball, res.r)
            term = t @ t.T
            total = total - term if k % 2 else total + term
    return total


def z_product(rep: Representation, ball: Ball, F: Iterable[ElementLike]) -> RationalMatrix:
    """The product over p in F of (I - V_p V_p^T), in sorted order of F."""
    eye = RationalMatrix.identity(rep.dim)
    out = eye
    for x in sorted({ball.index(p) for p in F}):
        v = rep.element(ball, x)
        out = out @ (eye - v @ v.T)
    return out


def extend_by_zero(inc: ParabolicInclusion, V: Representation) -> Representation:
    """Extend a representation of the parabolic submonoid by 0 off the submonoid.

    ``V`` is indexed by the generators of the submonoid in sorted order.  The
    result sends every generator outside the subset to the zero matrix, which,
    given closure under factorization, is T(p) = V_p on the submonoid and 0
    elsewhere.  Multiplicativity is verified on every product inside the ball.
    """
    verdict = check_closed_under_factorization(inc)
    if not isinstance(verdict, Holds):
        raise HypothesisError(f"inclusion is not closed under factorization: {verdict}")
    subset = sorted(inc.subset)
    if V.presentation.alphabet_size != len(subset):
        raise ValueError(f"representation has {V.presentation.alphabet_size} generators, subset has {len(subset)}")
    ball = inc.ambient
    pres = ball.presentation
    zero = RationalMatrix.zeros(V.dim)
    pos = {s: k for k, s in enumerate(subset)}
    gens = [V.generators[pos[s]] if s in pos else zero for s in range(pres.alphabet_size)]
    T = Representation(pres, gens, f"extend_by_zero({V.label})")

    members = inc.members
    for p in ball:
        expected = zero
        if p in members:
            sub_words = sorted(w for w in ball.classes[p] if all(c in pos for c in w))
            expected = V.word(tuple(pos[c] for c in sub_words[0]))
            if any(V.word(tuple(pos[c] for c in w)) != expected for w in sub_words):
                raise RelationError(f"V is not well defined on {ball.format(p)}")
        if T.element(ball, p) != expected:
            raise RelationError(f"extension does not restrict correctly at {ball.format(p)}")
        for q in ball:
            pq = ball.multiply(p, q)
            if pq is not None and T.element(ball, pq) != T.element(ball, p) @ T.element(ball, q):
                raise RelationError(f"T({ball.format(pq)}) != T({ball.format(p)}) T({ball.format(q)})")
    return T


def regular_expectation_identity(rep: TruncatedRegularRep, p: ElementLike, q: ElementLike) -> bool:
    """Whether the diagonal part of lambda(p) lambda(q)^T is delta_{p,q} lambda(p) lambda(p)^T."""
    ball = rep.ball
    p, q = ball.index(p), ball.index(q)
    lhs = diagonal_expectation(rep.element(ball, p) @ rep.element(ball, q).T)
    rhs = rep.projection(p) if p == q else RationalMatrix.zeros(len(ball))
    return lhs == rhs


def unitary_cycle(d: int) -> RationalMatrix:
    """The d x d cyclic permutation matrix."""
    return RationalMatrix(d, d, {(i + 1) % d: {i: Fraction(1)} for i in range(d)})


def truncated_shift(d: int) -> RationalMatrix:
    """The d x d unilateral shift e_i -> e_{i+1}, with e_{d-1} -> 0."""
    return RationalMatrix(d, d, {i + 1: {i: Fraction(1)} for i in range(d - 1)})
