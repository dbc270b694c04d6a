"""Parsers for monoid spec files and representation files.

Monoid spec grammar (one statement per line, ``#`` starts a comment)::

    spec        := [gens] monoid [gens]          (at most one gens line)
    monoid      := "free" N
                 | "coxeter" N matrix
                 | "presentation" N {"rel" WORD "=" WORD}
                 | "graphproduct" {"vertices" N | "edge" I J | "factor" inline} "end"
    matrix      := N rows of N entries            (entries: integers >= 1 or "inf")
                 | "[" row {";" row} "]"          (on the same line)
    inline      := "free" N | "coxeter" N "[" ... "]" | "presentation" N "[" WORD "=" WORD {";" ...} "]"
    gens        := "gens" NAME...                 (names for the whole alphabet)

Words use generator names (``a b c d f ...`` by default, ``e`` is the
identity).  Graph-product vertices are numbered from 0.

Representation file grammar::

    dim D
    gen NAME
    D rows of D rational literals (``3``, ``-1/2``)
    gen NAME
    ...

Every generator of the monoid must get exactly one matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .matrices import RationalMatrix
from .presentations import (
    CoxeterMatrix,
    HomogeneousPresentation,
    SimplicialGraph,
    WordSyntaxError,
    artin_presentation,
    default_names,
    free_presentation,
    graph_product,
)
from .replab import Representation


class SpecParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = ""):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass
class MonoidSpec:
    kind: str
    presentation: HomogeneousPresentation
    coxeter: CoxeterMatrix | None = None
    graph: SimplicialGraph | None = None
    factors: list["MonoidSpec"] = field(default_factory=list)

    @property
    def is_artin(self) -> bool:
        return self.kind in ("coxeter", "free")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _lines(text: str) -> list[list[_Tok]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0]
        toks = []
        # '[', ']', ';' and '=' are tokens of their own
        i = 0
        while i < len(raw):
            if raw[i] in "[];=":
                toks.append(_Tok(raw[i], ln, i + 1))
                i += 1
            elif raw[i].isspace():
                i += 1
            else:
                j = i
                while j < len(raw) and not raw[j].isspace() and raw[j] not in "[];=":
                    j += 1
                toks.append(_Tok(raw[i:j], ln, i + 1))
                i = j
        if toks:
            out.append(toks)
    return out


class _Parser:
    def __init__(self, text: str, source: str = ""):
        self.lines = _lines(text)
        self.pos = 0
        self.source = source
        self.names: tuple[str, ...] | None = None

    def error(self, msg: str, tok: _Tok | None = None):
        if tok is None:
            line = self.lines[-1][-1].line if self.lines else 1
            raise SpecParseError(msg, line, 1, self.source)
        raise SpecParseError(msg, tok.line, tok.col, self.source)

    def peek(self) -> list[_Tok] | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self) -> list[_Tok]:
        line = self.peek()
        if line is None:
            self.error("unexpected end of file")
        self.pos += 1
        return line

    def int_(self, tok: _Tok, minimum: int = 0) -> int:
        try:
            v = int(tok.text)
        except ValueError:
            self.error(f"expected an integer, got {tok.text!r}", tok)
        if v < minimum:
            self.error(f"expected an integer >= {minimum}, got {v}", tok)
        return v

    def entry(self, tok: _Tok):
        if tok.text.lower() in ("inf", "oo", "∞"):
            return "inf"
        return self.int_(tok, 1)

    def coxeter(self, n: int, rows: list[list[_Tok]], anchor: _Tok) -> CoxeterMatrix:
        if len(rows) != n:
            self.error(f"Coxeter matrix needs {n} rows, got {len(rows)}", anchor)
        parsed = []
        for row in rows:
            if len(row) != n:
                self.error(f"Coxeter matrix row needs {n} entries, got {len(row)}", row[0] if row else anchor)
            parsed.append([self.entry(t) for t in row])
        try:
            return CoxeterMatrix.from_rows(parsed)
        except ValueError as exc:
            self.error(str(exc), anchor)

    def bracket_groups(self, toks: list[_Tok]) -> list[list[_Tok]]:
        """Split ``[ a b ; c d ]`` into groups of tokens."""
        if not toks or toks[0].text != "[":
            self.error("expected '['", toks[0] if toks else None)
        if toks[-1].text != "]":
            self.error("expected ']' at end of line", toks[-1])
        groups, cur = [], []
        for t in toks[1:-1]:
            if t.text == ";":
                groups.append(cur)
                cur = []
            elif t.text in "[]":
                self.error(f"unexpected {t.text!r}", t)
            else:
                cur.append(t)
        groups.append(cur)
        return [g for g in groups if g]

    def relation(self, pres_names, n: int, toks: list[_Tok]) -> tuple:
        if len(toks) != 3 or toks[1].text != "=":
            self.error("relation must look like WORD = WORD", toks[0] if toks else None)
        tmp = HomogeneousPresentation(n, frozenset(), names=pres_names)
        words = []
        for t in (toks[0], toks[2]):
            try:
                words.append(tmp.parse_word(t.text))
            except WordSyntaxError as exc:
                raise SpecParseError(str(exc).rsplit(" (", 1)[0], t.line, t.col + exc.position, self.source) from None
        if len(words[0]) != len(words[1]):
            self.error(f"relation {toks[0].text} = {toks[2].text} does not preserve length", toks[0])
        if words[0] == words[1]:
            self.error(f"relation {toks[0].text} = {toks[2].text} is trivial", toks[0])
        return tuple(words)

    def monoid(self, head: list[_Tok], inline: bool) -> MonoidSpec:
        kw = head[0]
        rest = head[1:]
        if kw.text == "free":
            if len(rest) != 1:
                self.error("usage: free N", kw)
            n = self.int_(rest[0], 1)
            pres = free_presentation(n)
            return MonoidSpec("free", pres, pres.coxeter)
        if kw.text == "coxeter":
            if not rest:
                self.error("usage: coxeter N", kw)
            n = self.int_(rest[0], 1)
            if len(rest) > 1:
                rows = self.bracket_groups(rest[1:])
            elif inline:
                self.error("inline coxeter factor needs [row; row; ...]", kw)
            else:
                rows = [self.take() for _ in range(n) if self.peek() is not None]
            M = self.coxeter(n, rows, kw)
            return MonoidSpec("coxeter", artin_presentation(M), M)
        if kw.text == "presentation":
            if not rest:
                self.error("usage: presentation N", kw)
            n = self.int_(rest[0], 1)
            names = default_names(n)
            if not inline and self.names is not None and len(self.names) == n:
                names = self.names
            rels = []
            if len(rest) > 1:
                for group in self.bracket_groups(rest[1:]):
                    rels.append(self.relation(names, n, group))
            elif not inline:
                while self.peek() is not None and self.peek()[0].text == "rel":
                    line = self.take()
                    rels.append(self.relation(names, n, line[1:]))
            try:
                pres = HomogeneousPresentation(n, frozenset(rels), f"Presentation({n})")
            except ValueError as exc:
                self.error(str(exc), kw)
            return MonoidSpec("presentation", pres)
        if kw.text == "graphproduct" and not inline:
            return self.graphproduct(kw)
        self.error(f"unknown monoid kind {kw.text!r}", kw)

    def graphproduct(self, kw: _Tok) -> MonoidSpec:
        vertices = None
        edges = []
        factors = []
        while True:
            line = self.peek()
            if line is None:
                self.error("graphproduct block is missing 'end'", kw)
            self.take()
            head = line[0]
            if head.text == "end":
                break
            if head.text == "vertices":
                if len(line) != 2:
                    self.error("usage: vertices N", head)
                vertices = self.int_(line[1], 1)
            elif head.text == "edge":
                if len(line) != 3:
                    self.error("usage: edge I J", head)
                edges.append((self.int_(line[1]), self.int_(line[2]), head))
            elif head.text == "factor":
                if len(line) < 2:
                    self.error("usage: factor <monoid>", head)
                factors.append(self.monoid(line[1:], inline=True))
            else:
                self.error(f"unexpected {head.text!r} in graphproduct block", head)
        if vertices is None:
            self.error("graphproduct block needs 'vertices N'", kw)
        if len(factors) != vertices:
            self.error(f"graphproduct has {vertices} vertices but {len(factors)} factors", kw)
        for i, j, tok in edges:
            if i == j or i >= vertices or j >= vertices:
                self.error(f"bad edge {i} {j}", tok)
        graph = SimplicialGraph(vertices, frozenset((i, j) for i, j, _ in edges))
        pres = graph_product(graph, [f.presentation for f in factors])
        return MonoidSpec("graphproduct", pres, None, graph, factors)

    def gens(self, line: list[_Tok]) -> tuple[str, ...]:
        bad = [t for t in line[1:] if not t.text.isidentifier() or t.text == "e"]
        if bad:
            self.error(f"invalid generator name {bad[0].text!r}", bad[0])
        return tuple(t.text for t in line[1:])

    def parse(self) -> MonoidSpec:
        line = self.peek()
        if line is None:
            self.error("empty spec file")
        gens_line = None
        if line[0].text == "gens":
            gens_line = self.take()
            self.names = self.gens(gens_line)
            line = self.peek()
            if line is None:
                self.error("gens line without a monoid definition", gens_line[0])
        self.take()
        spec = self.monoid(line, inline=False)
        while self.peek() is not None:
            line = self.take()
            if line[0].text != "gens" or gens_line is not None:
                self.error(f"unexpected {line[0].text!r} after the monoid definition", line[0])
            gens_line = line
            self.names = self.gens(line)
        if gens_line is not None:
            names = self.names
            if len(names) != spec.presentation.alphabet_size:
                self.error(f"gens lists {len(names)} names for {spec.presentation.alphabet_size} generators",
                           gens_line[0])
            p = spec.presentation
            try:
                spec.presentation = HomogeneousPresentation(p.alphabet_size, p.relations, p.label, names, p.coxeter)
            except ValueError as exc:
                self.error(str(exc), gens_line[0])
        return spec


def parse_spec(text: str, source: str = "") -> MonoidSpec:
    return _Parser(text, source).parse()


def load_spec(path: str | Path) -> MonoidSpec:
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), str(path))


def parse_representation(text: str, presentation: HomogeneousPresentation, source: str = "") -> Representation:
    p = _Parser(text, source)
    line = p.peek()
    if line is None or line[0].text != "dim" or len(line) != 2:
        p.error("representation file must start with 'dim D'", line[0] if line else None)
    p.take()
    d = p.int_(line[1], 1)
    lookup = {name: i for i, name in enumerate(presentation.names)}
    mats: dict[int, RationalMatrix] = {}
    while p.peek() is not None:
        head = p.take()
        if head[0].text != "gen" or len(head) != 2:
            p.error("expected 'gen NAME'", head[0])
        name = head[1]
        if name.text not in lookup:
            p.error(f"unknown generator {name.text!r}", name)
        if lookup[name.text] in mats:
            p.error(f"generator {name.text!r} given twice", name)
        rows = []
        for _ in range(d):
            row = p.take()
            if len(row) != d:
                p.error(f"matrix row needs {d} entries, got {len(row)}", row[0])
            vals = []
            for t in row:
                try:
                    vals.append(Fraction(t.text))
                except (ValueError, ZeroDivisionError):
                    p.error(f"bad rational literal {t.text!r}", t)
            rows.append(vals)
        mats[lookup[name.text]] = RationalMatrix.from_rows(rows)
    missing = [presentation.names[s] for s in range(presentation.alphabet_size) if s not in mats]
    if missing:
        p.error(f"no matrix for generator(s) {', '.join(missing)}")
    return Representation(presentation, [mats[s] for s in range(presentation.alphabet_size)], source or "file")


def load_representation(path: str | Path, presentation: HomogeneousPresentation) -> Representation:
    path = Path(path)
    return parse_representation(path.read_text(encoding="utf-8"), presentation, str(path))
