"""Independent reference implementations used only by the tests.

None of these touch the saturation or ball code in the package: word
classes come from union-find over every string, lcm from raw prefix sets,
Coxeter group orders from closing a real reflection representation, and
positive semidefiniteness from sympy principal minors.
"""

from __future__ import annotations

import itertools
import math

import sympy


class WordClasses:
    """Union-find over all words of length <= radius."""

    def __init__(self, alphabet_size: int, relations, radius: int):
        self.n = alphabet_size
        self.radius = radius
        self.parent: dict[tuple, tuple] = {}
        for length in range(radius + 1):
            for w in itertools.product(range(alphabet_size), repeat=length):
                self.parent[w] = w
        for u, v in relations:
            k = len(u)
            for length in range(k, radius + 1):
                for pre_len in range(length - k + 1):
                    for pre in itertools.product(range(alphabet_size), repeat=pre_len):
                        for suf in itertools.product(range(alphabet_size), repeat=length - k - pre_len):
                            self._union(pre + u + suf, pre + v + suf)

    def find(self, w):
        w = tuple(w)
        root = w
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[w] != root:
            self.parent[w], w = root, self.parent[w]
        return root

    def _union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> dict[tuple, list[tuple]]:
        out: dict[tuple, list[tuple]] = {}
        for w in self.parent:
            out.setdefault(self.find(w), []).append(w)
        return out

    def canonical(self, w) -> tuple:
        return min(c for c in self.classes_of(w))

    def classes_of(self, w):
        r = self.find(w)
        return [v for v in self.parent if len(v) == len(w) and self.find(v) == r]

    def sizes_by_length(self) -> tuple[int, ...]:
        roots = {self.find(w) for w in self.parent}
        return tuple(sum(1 for r in roots if len(r) == k) for k in range(self.radius + 1))


class LcmOracle:
    """Common right multiples within the radius from prefix sets of words."""

    def __init__(self, wc: WordClasses):
        self.wc = wc
        self.multiples: dict[tuple, frozenset] = {}
        mult: dict[tuple, set] = {}
        for w in wc.parent:
            rw = wc.find(w)
            for k in range(len(w) + 1):
                mult.setdefault(wc.find(w[:k]), set()).add(rw)
        self.multiples = {r: frozenset(s) for r, s in mult.items()}

    def common(self, x, y) -> frozenset:
        return self.multiples[self.wc.find(x)] & self.multiples[self.wc.find(y)]

    def lcm(self, x, y):
        """('lcm', root) | ('empty', None) | ('ambiguous', None) within the radius."""
        common = self.common(x, y)
        if not common:
            return "empty", None
        shortest = min(len(r) for r in common)
        minimal = [r for r in common if len(r) == shortest]
        if len(minimal) == 1 and common <= self.multiples[minimal[0]]:
            return "lcm", minimal[0]
        return "ambiguous", None


def coxeter_group_order(M, limit: int = 10_000) -> int | None:
    """Order of the Coxeter group of M by closing its reflection representation
    under multiplication; None if it exceeds ``limit``."""
    n = M.n
    B = [[-math.cos(math.pi / M[i, j]) if M[i, j] != math.inf else -1.0 for j in range(n)] for i in range(n)]
    gens = []
    for i in range(n):
        g = [[float(r == c) for c in range(n)] for r in range(n)]
        for c in range(n):
            g[i][c] -= 2 * B[i][c]
        gens.append(g)

    def mul(a, b):
        return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]

    def key(a):
        return tuple(round(v, 6) + 0.0 for row in a for v in row)

    ident = [[float(r == c) for c in range(n)] for r in range(n)]
    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                k = key(b)
                if k not in seen:
                    seen.add(k)
                    if len(seen) > limit:
                        return None
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def psd_by_minors(rows) -> bool:
    """Every principal minor is non-negative."""
    A = sympy.Matrix(rows)
    n = A.rows
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            if A.extract(list(idx), list(idx)).det() < 0:
                return False
    return True
