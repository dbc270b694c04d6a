"""Homogeneous monoid presentations, word problem, and length balls.

Words are tuples of generator indices.  Every relation preserves length,
so the equivalence class of a word is a finite set of words of the same
length and the word problem is solved by saturating under the relations.
The canonical representative of a class is its lexicographic minimum.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .verdict import Fails, Holds, Verdict

Word = tuple[int, ...]
ElementLike = Union[int, Sequence[int]]

DEFAULT_CAP = 10**6
INF = math.inf


class ResourceError(RuntimeError):
    """A saturation class or ball grew past its configured cap."""


def default_names(n: int) -> tuple[str, ...]:
    # 'e' is reserved for the identity
    letters = "abcdfghijklmnopqrstuvwxyz"
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple(f"s{i + 1}" for i in range(n))


def _normalize_relation(u: Sequence[int], v: Sequence[int]) -> tuple[Word, Word]:
    u, v = tuple(u), tuple(v)
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix with 1 on the diagonal and entries >= 2 (or inf) off it."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(INF if x == INF else int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"Coxeter matrix row {i} has length {len(row)}, expected {n}")
            for j, m in enumerate(row):
                if m != rows[j][i]:
                    raise ValueError(f"Coxeter matrix not symmetric at ({i}, {j})")
                if i == j and m != 1:
                    raise ValueError(f"Coxeter matrix diagonal entry ({i}, {i}) must be 1, got {m}")
                if i != j and m < 2:
                    raise ValueError(f"Coxeter matrix entry ({i}, {j}) must be >= 2 or inf, got {m}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "CoxeterMatrix":
        parsed = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, str):
                    x = INF if x.strip().lower() in ("inf", "oo", "∞") else int(x)
                out.append(x)
            parsed.append(tuple(out))
        return cls(tuple(parsed))

    @classmethod
    def uniform(cls, n: int, m: float) -> "CoxeterMatrix":
        return cls(tuple(tuple(1 if i == j else m for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, indices: Sequence[int]) -> "CoxeterMatrix":
        return CoxeterMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def permuted(self, perm: Sequence[int]) -> "CoxeterMatrix":
        return self.submatrix(perm)

    def to_json(self) -> list[list]:
        return [["inf" if m == INF else int(m) for m in row] for row in self.entries]


@dataclass(frozen=True)
class SimplicialGraph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = tuple(e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise ValueError(f"edge {{{i}, {j}}} out of range")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @classmethod
    def complete(cls, n: int) -> "SimplicialGraph":
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> "SimplicialGraph":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))


@dataclass(frozen=True)
class HomogeneousPresentation:
    alphabet_size: int
    relations: frozenset = field(default_factory=frozenset)
    label: str = ""
    names: tuple[str, ...] = ()
    coxeter: CoxeterMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        rels = set()
        for u, v in self.relations:
            u, v = tuple(u), tuple(v)
            if len(u) != len(v):
                raise ValueError(f"relation {u} = {v} is not length-preserving")
            if u == v:
                raise ValueError(f"relation pairs the word {u} with itself")
            for x in u + v:
                if not 0 <= x < self.alphabet_size:
                    raise ValueError(f"letter {x} out of range in relation {u} = {v}")
            rels.add(_normalize_relation(u, v))
        object.__setattr__(self, "relations", frozenset(rels))
        if not self.names:
            object.__setattr__(self, "names", default_names(self.alphabet_size))
        if len(self.names) != self.alphabet_size or len(set(self.names)) != self.alphabet_size:
            raise ValueError("generator names must be distinct, one per generator")
        if self.coxeter is not None and self.coxeter.n != self.alphabet_size:
            raise ValueError("Coxeter matrix rank does not match alphabet size")

    @cached_property
    def _rewrites(self) -> dict[Word, tuple[Word, ...]]:
        table: dict[Word, list[Word]] = {}
        for u, v in self.relations:
            table.setdefault(u, []).append(v)
            table.setdefault(v, []).append(u)
        return {k: tuple(sorted(vs)) for k, vs in table.items()}

    @cached_property
    def _relation_lengths(self) -> tuple[int, ...]:
        return tuple(sorted({len(u) for u, _ in self.relations}))

    # word syntax

    def parse_word(self, text: str) -> Word:
        """Parse generator names; tokens may be separated by spaces or dots.

        Without separators the text is split greedily by longest name.
        ``e``, ``1`` or an empty string denote the identity.
        """
        text = text.strip()
        if text in ("", "1") or (text == "e" and "e" not in self.names):
            return ()
        lookup = {name: i for i, name in enumerate(self.names)}
        if any(c in text for c in " .*"):
            tokens = [t for t in text.replace("*", ".").replace(" ", ".").split(".") if t]
            out = []
            pos = 0
            for tok in tokens:
                pos = text.index(tok, pos)
                if tok not in lookup:
                    raise WordSyntaxError(f"unknown generator {tok!r}", pos)
                out.append(lookup[tok])
                pos += len(tok)
            return tuple(out)
        out = []
        pos = 0
        by_length = sorted(self.names, key=len, reverse=True)
        while pos < len(text):
            for name in by_length:
                if text.startswith(name, pos):
                    out.append(lookup[name])
                    pos += len(name)
                    break
            else:
                raise WordSyntaxError(f"cannot read a generator at {text[pos:]!r}", pos)
        return tuple(out)

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return "e"
        sep = "" if all(len(n) == 1 for n in self.names) else "."
        return sep.join(self.names[x] for x in w)


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position


def alternating_product(s: int, t: int, m: int) -> Word:
    """The word sts... with m letters."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if s == t and m > 1:
        raise ValueError("alternating product needs distinct letters when m > 1")
    return tuple(s if k % 2 == 0 else t for k in range(m))


def artin_presentation(M: CoxeterMatrix, names: Sequence[str] = ()) -> HomogeneousPresentation:
    rels = set()
    for i in range(M.n):
        for j in range(i + 1, M.n):
            m = M[i, j]
            if m == INF:
                continue
            rels.add((alternating_product(i, j, m), alternating_product(j, i, m)))
    return HomogeneousPresentation(M.n, frozenset(rels), f"Artin({M.to_json()})", tuple(names), M)


def free_presentation(n: int, names: Sequence[str] = ()) -> HomogeneousPresentation:
    pres = artin_presentation(CoxeterMatrix.uniform(n, INF), names)
    return HomogeneousPresentation(n, pres.relations, f"Free({n})", pres.names, pres.coxeter)


def graph_product(
    graph: SimplicialGraph,
    factors: Sequence[HomogeneousPresentation],
    names: Sequence[str] = (),
) -> HomogeneousPresentation:
    """Free product of the factors modulo commutation along the edges of ``graph``."""
    if len(factors) != graph.vertex_count:
        raise ValueError(f"graph has {graph.vertex_count} vertices but {len(factors)} factors were given")
    offsets = []
    total = 0
    for f in factors:
        offsets.append(total)
        total += f.alphabet_size
    rels = set()
    for f, off in zip(factors, offsets):
        for u, v in f.relations:
            rels.add((tuple(x + off for x in u), tuple(x + off for x in v)))
    for i, j in sorted(graph.edges):
        for x in range(factors[i].alphabet_size):
            for y in range(factors[j].alphabet_size):
                a, b = x + offsets[i], y + offsets[j]
                rels.add(((a, b), (b, a)))

    coxeter = None
    if all(f.coxeter is not None for f in factors):
        # a graph product of Artin monoids is again an Artin monoid
        rows = [[INF] * total for _ in range(total)]
        for v, (f, off) in enumerate(zip(factors, offsets)):
            for x in range(f.alphabet_size):
                for y in range(f.alphabet_size):
                    rows[off + x][off + y] = f.coxeter[x, y]
            for w in range(graph.vertex_count):
                if w != v and graph.adjacent(v, w):
                    for x in range(f.alphabet_size):
                        for y in range(factors[w].alphabet_size):
                            rows[off + x][offsets[w] + y] = 2
        coxeter = CoxeterMatrix(tuple(tuple(r) for r in rows))

    label = "GraphProduct(%d; %s; %s)" % (
        graph.vertex_count,
        sorted(graph.edges),
        ", ".join(f.label for f in factors),
    )
    return HomogeneousPresentation(total, frozenset(rels), label, tuple(names), coxeter)


def parabolic_presentation(pres: HomogeneousPresentation, subset: Iterable[int]) -> HomogeneousPresentation:
    """Presentation on the letters in ``subset`` (re-indexed in sorted order) using
    the relations that only involve those letters."""
    subset = sorted(set(subset))
    pos = {s: k for k, s in enumerate(subset)}
    rels = set()
    for u, v in pres.relations:
        if all(x in pos for x in u + v):
            rels.add((tuple(pos[x] for x in u), tuple(pos[x] for x in v)))
    cox = pres.coxeter.submatrix(subset) if pres.coxeter is not None else None
    names = tuple(pres.names[s] for s in subset)
    return HomogeneousPresentation(len(subset), frozenset(rels), f"Parabolic({pres.label}; {names})", names, cox)


def saturate(pres: HomogeneousPresentation, w: Sequence[int], cap: int = DEFAULT_CAP) -> frozenset:
    """All words equivalent to ``w``; raises ResourceError past ``cap`` words."""
    w = tuple(w)
    rewrites = pres._rewrites
    lengths = pres._relation_lengths
    seen = {w}
    todo = deque([w])
    while todo:
        cur = todo.popleft()
        n = len(cur)
        for ell in lengths:
            for i in range(n - ell + 1):
                targets = rewrites.get(cur[i:i + ell])
                if not targets:
                    continue
                head, tail = cur[:i], cur[i + ell:]
                for t in targets:
                    nxt = head + t + tail
                    if nxt not in seen:
                        seen.add(nxt)
                        if len(seen) > cap:
                            raise ResourceError(f"saturation class of {w} exceeds cap {cap}")
                        todo.append(nxt)
    return frozenset(seen)


def equal(pres: HomogeneousPresentation, u: Sequence[int], v: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    return v in saturate(pres, u, cap)


def canonical(pres: HomogeneousPresentation, w: Sequence[int], cap: int = DEFAULT_CAP) -> Word:
    return min(saturate(pres, w, cap))


@dataclass(frozen=True)
class Element:
    canonical: Word
    class_size: int

    def __len__(self) -> int:
        return len(self.canonical)


class Ball:
    """All elements of length <= radius, with left divisibility between them.

    Elements are addressed by index.  Indices are ordered by length, then
    lexicographically by canonical word, so the ball of radius L is an
    index prefix of the ball of radius L+1.
    """

    def __init__(
        self,
        presentation: HomogeneousPresentation,
        radius: int,
        classes: Sequence[frozenset],
        quotients: Sequence[dict[int, frozenset]] | None = None,
        subset: frozenset | None = None,
        parent: "Ball | None" = None,
        parent_index: Sequence[int] | None = None,
    ):
        self.presentation = presentation
        self.radius = radius
        self.classes = tuple(classes)
        self.words = tuple(min(c) for c in self.classes)
        self.lengths = tuple(len(w) for w in self.words)
        self.subset = subset
        self.parent = parent
        self.parent_index = tuple(parent_index) if parent_index is not None else None
        self._index = {w: i for i, c in enumerate(self.classes) for w in c}
        self._quotients = list(quotients) if quotients is not None else self._compute_quotients()
        mult: list[set] = [set() for _ in self.words]
        for b, divs in enumerate(self._quotients):
            for a in divs:
                mult[a].add(b)
        self.multiples = tuple(frozenset(m) for m in mult)
        self.divisors = tuple(frozenset(d) for d in self._quotients)

    def _compute_quotients(self) -> list[dict[int, frozenset]]:
        out = []
        for cls in self.classes:
            found: dict[int, set] = {}
            for w in cls:
                for k in range(len(w) + 1):
                    a = self._index[w[:k]]
                    x = self._index[w[k:]]
                    found.setdefault(a, set()).add(x)
            out.append({a: frozenset(xs) for a, xs in found.items()})
        return out

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(range(len(self.words)))

    def __contains__(self, w) -> bool:
        return tuple(w) in self._index

    def index(self, x: ElementLike) -> int:
        if isinstance(x, int):
            if not 0 <= x < len(self.words):
                raise IndexError(f"element index {x} outside ball of size {len(self.words)}")
            return x
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise KeyError(f"word {tuple(x)} is not in this ball (radius {self.radius})") from None

    def element(self, x: ElementLike) -> Element:
        i = self.index(x)
        return Element(self.words[i], len(self.classes[i]))

    def word(self, x: ElementLike) -> Word:
        return self.words[self.index(x)]

    def format(self, x: ElementLike) -> str:
        return self.presentation.format_word(self.word(x))

    @property
    def generators(self) -> tuple[int, ...]:
        letters = range(self.presentation.alphabet_size) if self.subset is None else sorted(self.subset)
        return tuple(self._index[(s,)] for s in letters if (s,) in self._index)

    def sizes_by_length(self) -> tuple[int, ...]:
        counts = [0] * (self.radius + 1)
        for n in self.lengths:
            counts[n] += 1
        return tuple(counts)

    def quotients(self, a: ElementLike, b: ElementLike) -> frozenset:
        """All x in the ball with a.x = b (a singleton in a left-cancellative monoid)."""
        return self._quotients[self.index(b)].get(self.index(a), frozenset())

    def divides(self, a: ElementLike, b: ElementLike) -> bool:
        return self.index(a) in self._quotients[self.index(b)]

    def quotient(self, a: ElementLike, b: ElementLike) -> int | None:
        qs = self.quotients(a, b)
        return min(qs) if qs else None

    def multiply(self, x: ElementLike, y: ElementLike) -> int | None:
        """Index of x.y, or None when the product leaves the ball."""
        w = self.word(x) + self.word(y)
        return self._index.get(w) if len(w) <= self.radius else None

    def is_parabolic(self, x: ElementLike, subset: Iterable[int]) -> bool:
        subset = set(subset)
        return any(all(c in subset for c in w) for w in self.classes[self.index(x)])

    def restrict(self, subset: Iterable[int]) -> "Ball":
        """Ball of the parabolic submonoid generated by ``subset``, as it sits inside
        this ball.  Divisibility is divisibility inside the submonoid: a | b iff
        b = a.x with x also in the submonoid."""
        subset = frozenset(subset)
        members = [i for i in self if self.is_parabolic(i, subset)]
        pos = {i: k for k, i in enumerate(members)}
        classes = [frozenset(w for w in self.classes[i] if all(c in subset for c in w)) for i in members]
        quotients = []
        for i in members:
            q = {}
            for a, xs in self._quotients[i].items():
                if a in pos:
                    inside = frozenset(pos[x] for x in xs if x in pos)
                    if inside:
                        q[pos[a]] = inside
            quotients.append(q)
        root = self if self.parent is None else self.parent
        parent_index = members if self.parent is None else [self.parent_index[i] for i in members]
        return Ball(
            self.presentation, self.radius, classes, quotients,
            subset=subset, parent=root, parent_index=parent_index,
        )


def enumerate_ball(pres: HomogeneousPresentation, radius: int, cap: int = DEFAULT_CAP) -> Ball:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    seen: set = {()}
    classes: list[frozenset] = [frozenset([()])]
    level = [()]
    total_words = 1
    for _ in range(radius):
        new_classes = []
        for c in level:
            for s in range(pres.alphabet_size):
                w = c + (s,)
                if w in seen:
                    continue
                cls = saturate(pres, w, cap)
                seen.update(cls)
                total_words += len(cls)
                if total_words > cap:
                    raise ResourceError(f"ball of radius {radius} exceeds cap {cap} words")
                new_classes.append(cls)
        new_classes.sort(key=min)
        classes.extend(new_classes)
        level = [min(c) for c in new_classes]
    return Ball(pres, radius, classes)


def left_divides(ball: Ball, a: ElementLike, b: ElementLike) -> tuple[bool, int | None]:
    """Whether b lies in aP, and the quotient x with a.x = b when it does."""
    q = ball.quotient(a, b)
    return q is not None, q


def parabolic_member(ball: Ball, subset: Iterable[int], x: ElementLike) -> bool:
    return ball.is_parabolic(x, subset)


def check_cancellativity(ball: Ball) -> Verdict:
    """Search the ball for px = py or xp = yp with x != y."""
    if ball.radius < 2:
        raise ValueError("cancellativity needs a ball of radius at least 2")
    for b, divs in enumerate(ball._quotients):
        for p, xs in sorted(divs.items()):
            if len(xs) > 1:
                x, y = sorted(xs)[:2]
                return Fails({"side": "left", "p": ball.words[p], "x": ball.words[x],
                              "y": ball.words[y], "product": ball.words[b]}, ball.radius)
    # right division: split each class word into prefix.suffix
    for b, cls in enumerate(ball.classes):
        found: dict[int, set] = {}
        for w in cls:
            for k in range(len(w) + 1):
                found.setdefault(ball._index[w[k:]], set()).add(ball._index[w[:k]])
        for p, xs in sorted(found.items()):
            if len(xs) > 1:
                x, y = sorted(xs)[:2]
                return Fails({"side": "right", "p": ball.words[p], "x": ball.words[x],
                              "y": ball.words[y], "product": ball.words[b]}, ball.radius)
    return Holds(ball.radius, len(ball))
