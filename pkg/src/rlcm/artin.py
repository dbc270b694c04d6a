"""Artin monoids: type classification and the Nica-amenability dichotomy.

An Artin monoid is Nica amenable exactly when its Coxeter matrix is
right-angled (all off-diagonal entries 2 or inf).  When it is not, some
pair of generators spans a non-abelian dihedral parabolic submonoid, which
is closed under factorization and preserves orthogonality; non-abelian
spherical Artin monoids are never Nica amenable, and amenability passes to
such submonoids.  The verdicts here are logical conclusions with citations,
not numerical computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence, Union

from .inclusions import (
    ParabolicInclusion,
    check_closed_under_factorization,
    check_preserves_orthogonality,
    check_respects_lcm,
)
from .presentations import (
    DEFAULT_CAP,
    INF,
    CoxeterMatrix,
    HomogeneousPresentation,
    SimplicialGraph,
    artin_presentation,
    enumerate_ball,
)
from .verdict import Verdict

RIGHT_ANGLED_CITATION = (
    "right-angled Artin monoids are Nica amenable (Crisp-Laca 2002, Theorem 20); "
    "an Artin monoid is Nica amenable iff it is right-angled"
)
DIHEDRAL_CITATION = (
    "non-right-angled Artin monoids contain a non-abelian dihedral parabolic submonoid "
    "(Crisp 1999, Theorem 1.3) that is closed under factorization and preserves orthogonality "
    "since s v t = <st>^m (Brieskorn-Saito 1972, Lemma 2.1); non-abelian spherical Artin monoids "
    "are not Nica amenable (Crisp-Laca 2002, Proposition 28) and Nica amenability passes to "
    "such submonoids"
)
GRAPH_PRODUCT_CITATION = (
    "a factor of a graph product is closed under factorization and preserves orthogonality "
    "(Fountain-Kambites 2009, Lemma 2.7), so Nica amenability of the product passes to every factor"
)
OPEN_PROBLEM_CITATION = (
    "whether Nica amenability of every factor implies Nica amenability of the graph product "
    "is an open problem"
)
QUASI_LATTICE_CAVEAT = (
    "it is not known whether this Artin monoid induces a quasi-lattice order on its group; "
    "the verdict only uses the right-LCM structure of the monoid"
)


@dataclass(frozen=True)
class ArtinClass:
    right_angled: bool
    spherical: bool
    abelian: bool
    offending_entry: tuple[int, int, int] | None = None
    types: tuple[str, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {
            "right_angled": self.right_angled,
            "spherical": self.spherical,
            "abelian": self.abelian,
            "offending_entry": list(self.offending_entry) if self.offending_entry else None,
            "types": list(self.types),
        }


@dataclass(frozen=True)
class NicaAmenable:
    reason: str
    citation: str

    kind = "nica_amenable"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "reason": self.reason, "citation": self.citation}


@dataclass(frozen=True)
class NotNicaAmenable:
    witness: dict[str, Any]
    citation: str
    reason: str = ""

    kind = "not_nica_amenable"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "reason": self.reason, "witness": self.witness, "citation": self.citation}


@dataclass(frozen=True)
class Unknown:
    reason: str
    citation: str = ""

    kind = "unknown"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "reason": self.reason, "citation": self.citation}


AmenabilityVerdict = Union[NicaAmenable, NotNicaAmenable, Unknown]


def _components(M: CoxeterMatrix) -> list[list[int]]:
    # Coxeter diagram: an edge wherever m >= 3 (inf included)
    seen = set()
    comps = []
    for start in range(M.n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(M.n):
                if w != v and M[v, w] >= 3 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _finite_type(M: CoxeterMatrix, comp: list[int]) -> str | None:
    """Name of the finite Coxeter type of a connected diagram, or None."""
    n = len(comp)
    if n == 1:
        return "A1"
    edges = {}
    for a in comp:
        for b in comp:
            if a < b and M[a, b] >= 3:
                edges[(a, b)] = M[a, b]
    if any(m == INF for m in edges.values()):
        return None
    if n == 2:
        m = next(iter(edges.values()))
        return "A2" if m == 3 else f"I2({int(m)})"
    if len(edges) != n - 1:
        return None  # contains a cycle
    degree = {v: 0 for v in comp}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    labels = sorted(edges.values())
    branch = [v for v in comp if degree[v] >= 3]
    if branch:
        if len(branch) > 1 or degree[branch[0]] > 3 or labels[-1] != 3:
            return None
        arms = sorted(_arm_length(edges, branch[0], w) for w in comp if _adjacent(edges, branch[0], w))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return f"E{n}"
        return None
    # a path
    ends = [v for v in comp if degree[v] == 1]
    order = [ends[0]]
    while len(order) < n:
        nxt = [w for w in comp if w not in order and _adjacent(edges, order[-1], w)]
        order.append(nxt[0])
    path_labels = [M[order[k], order[k + 1]] for k in range(n - 1)]
    if labels[-1] == 3:
        return f"A{n}"
    special = [k for k, m in enumerate(path_labels) if m != 3]
    if len(special) != 1:
        return None
    k, m = special[0], path_labels[special[0]]
    at_end = k in (0, n - 2)
    if m == 4 and at_end:
        return f"B{n}"
    if m == 4 and n == 4:
        return "F4"
    if m == 5 and at_end and n in (3, 4):
        return f"H{n}"
    return None


def _adjacent(edges: dict, a: int, b: int) -> bool:
    return (min(a, b), max(a, b)) in edges


def _arm_length(edges: dict, center: int, first: int) -> int:
    length, prev, cur = 1, center, first
    while True:
        nxt = [w for (a, b) in edges for w in (a, b)
               if cur in (a, b) and w not in (cur, prev)]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def classify(M: CoxeterMatrix) -> ArtinClass:
    offending = None
    abelian = True
    for i in range(M.n):
        for j in range(i + 1, M.n):
            m = M[i, j]
            if m != 2:
                abelian = False
            if m not in (2, INF) and offending is None:
                offending = (i, j, int(m))
    types = []
    spherical = True
    for comp in _components(M):
        t = _finite_type(M, comp)
        if t is None:
            spherical = False
            types.append("infinite")
        else:
            types.append(t)
    return ArtinClass(offending is None, spherical, abelian, offending, tuple(types))


def amenability_verdict(M: CoxeterMatrix) -> AmenabilityVerdict:
    c = classify(M)
    if c.right_angled:
        return NicaAmenable("right-angled Coxeter matrix", RIGHT_ANGLED_CITATION)
    i, j, m = c.offending_entry
    return NotNicaAmenable(
        {"generators": [i, j], "m": m},
        DIHEDRAL_CITATION,
        f"m[{i}][{j}] = {m} is neither 2 nor inf; the dihedral submonoid on generators {i}, {j} "
        f"is not Nica amenable",
    )


@dataclass
class DihedralWitnessReport:
    generators: tuple[int, int]
    m: int
    radius: int
    closed_under_factorization: Verdict
    preserves_orthogonality: Verdict
    respects_lcm: Verdict
    citation: str = DIHEDRAL_CITATION
    caveats: list[str] = field(default_factory=list)

    def verdicts(self) -> dict[str, Verdict]:
        return {
            "closed_under_factorization": self.closed_under_factorization,
            "preserves_orthogonality": self.preserves_orthogonality,
            "respects_lcm": self.respects_lcm,
        }


def dihedral_witness_report(
    M: CoxeterMatrix, radius: int, cap: int = DEFAULT_CAP,
    presentation: HomogeneousPresentation | None = None,
) -> DihedralWitnessReport:
    """Run the three inclusion checks on the dihedral parabolic that witnesses
    non-amenability."""
    c = classify(M)
    if c.right_angled:
        raise ValueError("right-angled Coxeter matrix has no dihedral witness")
    if M.n == 2:
        raise ValueError(
            "rank-2 matrix is already dihedral: the witness is the whole monoid, "
            "there is no proper inclusion to check"
        )
    i, j, m = c.offending_entry
    pres = presentation if presentation is not None else artin_presentation(M)
    ball = enumerate_ball(pres, radius, cap)
    inc = ParabolicInclusion(ball, frozenset((i, j)))
    caveats = [] if c.spherical else [QUASI_LATTICE_CAVEAT]
    return DihedralWitnessReport(
        (i, j), m, radius,
        check_closed_under_factorization(inc),
        check_preserves_orthogonality(inc),
        check_respects_lcm(inc),
        caveats=caveats,
    )


def _is_copy_of_n(p: HomogeneousPresentation) -> bool:
    return p.alphabet_size == 1 and not p.relations


def propagate_graph_product(
    graph: SimplicialGraph,
    factor_verdicts: Sequence[AmenabilityVerdict],
    factors: Sequence[HomogeneousPresentation] | None = None,
) -> AmenabilityVerdict:
    if len(factor_verdicts) != graph.vertex_count:
        raise ValueError(f"graph has {graph.vertex_count} vertices but {len(factor_verdicts)} verdicts were given")
    if factors is not None and len(factors) != graph.vertex_count:
        raise ValueError(f"graph has {graph.vertex_count} vertices but {len(factors)} factors were given")
    for k, v in enumerate(factor_verdicts):
        if isinstance(v, NotNicaAmenable):
            return NotNicaAmenable(
                {"factor": k, "factor_verdict": v.to_json()},
                GRAPH_PRODUCT_CITATION,
                f"factor {k} is not Nica amenable",
            )
    if factors is not None and all(_is_copy_of_n(f) for f in factors):
        return NicaAmenable(
            "graph product of copies of N is a right-angled Artin monoid",
            RIGHT_ANGLED_CITATION,
        )
    if all(isinstance(v, NicaAmenable) for v in factor_verdicts):
        return Unknown("all factors are Nica amenable", OPEN_PROBLEM_CITATION)
    return Unknown("some factor verdict is unknown", GRAPH_PRODUCT_CITATION)
