"""Aristotelian relations, the square/cube/hexagon claim sets, and DOT output.

Claims are plain data: a relation between two statements plus the side
conditions under which it is asserted.  :func:`verify_shape` checks every
claim of a shape at every admissible point (P, Q) of a structure and
reports ``holds``, ``violated`` (with the first falsifying point, P-major)
or ``vacuous`` (no admissible point).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

from .core import ClassCStructure
from .statements import StatementKind, abs_max, truth

__all__ = [
    "FORWARD",
    "FULL",
    "Claim",
    "ClaimResult",
    "Diagram",
    "Hypothesis",
    "RelationKind",
    "Relations",
    "Shape",
    "Verdict",
    "VerificationReport",
    "admissible_points",
    "build_diagram",
    "classify_pair",
    "counterexample_search",
    "expected_claims",
    "relation_holds",
    "render_dot",
    "verify_shape",
    "violating_points",
]

S = StatementKind


class RelationKind(str, Enum):
    CONTRARY = "contrary"
    SUBCONTRARY = "subcontrary"
    CONTRADICTORY = "contradictory"
    SUB_IMPLICATION = "implies"
    SUPER_IMPLICATION = "implied-by"

    def __str__(self) -> str:
        return self.value


R = RelationKind


def relation_holds(kind: RelationKind, v1: bool, v2: bool) -> bool:
    """Whether one truth-value assignment is compatible with ``kind``."""
    if kind is R.CONTRARY:
        return not (v1 and v2)
    if kind is R.SUBCONTRARY:
        return v1 or v2
    if kind is R.CONTRADICTORY:
        return v1 != v2
    if kind is R.SUB_IMPLICATION:
        return v2 or not v1
    return v1 or not v2


class Shape(str, Enum):
    SQUARE = "square"
    CUBE = "cube"
    HEXAGON = "hexagon"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Hypothesis:
    """Side conditions on (P, Q); a point is admissible when all enabled flags hold.

    forward:  some zero z with P > z (strictly)
    backward: some zero z with neg(P) > z
    distinct: P != Q
    nondual:  P != neg(Q)
    """

    forward: bool = False
    backward: bool = False
    distinct: bool = False
    nondual: bool = False

    def admits(self, s: ClassCStructure, p: int, q: int) -> bool:
        if self.distinct and p == q:
            return False
        if self.nondual and p == s.neg[q]:
            return False
        if self.forward and not any(s.lt(z, p) for z in s.zeros):
            return False
        if self.backward and not any(s.lt(z, s.neg[p]) for z in s.zeros):
            return False
        return True

    def flags(self) -> str:
        on = [f for f in ("forward", "backward", "distinct", "nondual") if getattr(self, f)]
        return "+".join(on) or "none"

    def covers(self, other: Hypothesis) -> bool:
        """True when every flag enabled in ``other`` is enabled here."""
        return all(getattr(self, f) or not getattr(other, f) for f in ("forward", "backward", "distinct", "nondual"))


FORWARD = Hypothesis(forward=True)
FULL = Hypothesis(forward=True, distinct=True, nondual=True)


@dataclass(frozen=True)
class Claim:
    kind: RelationKind
    pair: tuple[StatementKind, StatementKind]
    requires: Hypothesis = FORWARD
    note: str = ""

    def __post_init__(self):
        if self.pair[0] == self.pair[1]:
            raise ValueError("a claim relates two distinct statements")

    def __str__(self) -> str:
        s1, s2 = self.pair
        if self.kind is R.SUB_IMPLICATION:
            return f"{s1}->{s2}"
        if self.kind is R.SUPER_IMPLICATION:
            return f"{s1}<-{s2}"
        return f"{self.kind}({s1},{s2})"

    @classmethod
    def parse(cls, text: str, abs_form: bool = False) -> Claim:
        """Parse ``A->I``, ``A<-I`` or ``contrary(A,E)`` style claim strings."""
        text = text.replace(" ", "")
        st = lambda tag: StatementKind.parse(tag, abs_form)  # noqa: E731
        for arrow, kind in (("->", R.SUB_IMPLICATION), ("<-", R.SUPER_IMPLICATION)):
            if arrow in text:
                s1, s2 = text.split(arrow)
                return cls(kind, (st(s1), st(s2)))
        if "(" in text and text.endswith(")"):
            name, args = text[:-1].split("(", 1)
            s1, s2 = args.split(",")
            return cls(RelationKind(name.lower()), (st(s1), st(s2)))
        raise ValueError(f"cannot parse claim {text!r}")

    def holds_at(self, s: ClassCStructure, p: int, q: int) -> bool:
        s1, s2 = self.pair
        return relation_holds(self.kind, truth(s, s1, p, q), truth(s, s2, p, q))

    @property
    def needs_abs(self) -> bool:
        return self.pair[0].needs_abs or self.pair[1].needs_abs


def _sub(a, b, req=FORWARD, note=""):
    return Claim(R.SUB_IMPLICATION, (a, b), req, note)


def _rel(kind, a, b, req=FORWARD, note=""):
    return Claim(kind, (a, b), req, note)


SENSITIVE = "stated under forward import only; re-check with backward import"

SQUARE_CLAIMS = (
    _sub(S.A, S.I),
    _sub(S.E, S.O),
    _rel(R.CONTRARY, S.A, S.E),
    _rel(R.SUBCONTRARY, S.I, S.O),
    _rel(R.CONTRADICTORY, S.A, S.O),
    _rel(R.CONTRADICTORY, S.E, S.I),
)

CUBE_CLAIMS = (
    _sub(S.A, S.e),
    _sub(S.E, S.a),
    _sub(S.o, S.I),
    _sub(S.i, S.O),
    _rel(R.CONTRARY, S.a, S.e, note=SENSITIVE),
    _rel(R.SUBCONTRARY, S.i, S.o, note=SENSITIVE),
    _rel(R.CONTRARY, S.A, S.E),
    _rel(R.SUBCONTRARY, S.I, S.O),
    _rel(R.SUBCONTRARY, S.a, S.I),
    _rel(R.SUBCONTRARY, S.e, S.O),
    _rel(R.CONTRARY, S.A, S.i),
    _rel(R.CONTRARY, S.E, S.o),
    _rel(R.CONTRADICTORY, S.a, S.o),
    _rel(R.CONTRADICTORY, S.e, S.i),
    _rel(R.CONTRADICTORY, S.A, S.O),
    _rel(R.CONTRADICTORY, S.E, S.I),
)

CUBE_CONDITIONAL_CLAIMS = (
    _rel(R.CONTRARY, S.A, S.a, FULL),
    _rel(R.CONTRARY, S.E, S.e, FULL),
    _rel(R.SUBCONTRARY, S.I, S.i, FULL),
    _rel(R.SUBCONTRARY, S.O, S.o, FULL),
    _sub(S.A, S.o, FULL),
    _sub(S.E, S.i, FULL),
    _sub(S.a, S.O, FULL),
    _sub(S.e, S.I, FULL),
)

# the two cube faces carry the square's subalternations; the cube theorem
# does not restate them, but the figure links every pair of vertices
CUBE_FACE_EDGES = (
    _sub(S.A, S.I),
    _sub(S.E, S.O),
    _sub(S.a, S.i, Hypothesis(backward=True)),
    _sub(S.e, S.o, Hypothesis(backward=True)),
)


def _hexagon_claims(abs_form: bool) -> tuple[Claim, ...]:
    u, y = (S.U_ABS, S.Y_ABS) if abs_form else (S.U, S.Y)
    return SQUARE_CLAIMS + (
        _sub(S.A, u),
        _sub(S.E, u),
        _sub(y, S.I),
        _sub(y, S.O),
        _rel(R.CONTRARY, S.A, y),
        _rel(R.CONTRARY, S.E, y),
        _rel(R.SUBCONTRARY, S.I, u),
        _rel(R.SUBCONTRARY, S.O, u),
    )


def expected_claims(shape: Shape | str, h: Hypothesis = FORWARD, abs_form: bool = False) -> list[Claim]:
    shape = Shape(shape)
    if shape is Shape.SQUARE:
        return list(SQUARE_CLAIMS)
    if shape is Shape.CUBE:
        claims = list(CUBE_CLAIMS)
        if h.distinct and h.nondual:
            claims += CUBE_CONDITIONAL_CLAIMS
        return claims
    return list(_hexagon_claims(abs_form))


def admissible_points(s: ClassCStructure, h: Hypothesis, need_abs: bool = False) -> list[tuple[int, int]]:
    """All (P, Q) satisfying ``h``, in P-major index order."""
    n = len(s)
    return [
        (p, q)
        for p, q in itertools.product(range(n), range(n))
        if h.admits(s, p, q) and not (need_abs and abs_max(s, q) is None)
    ]


def violating_points(s: ClassCStructure, claim: Claim, h: Hypothesis) -> list[tuple[int, int]]:
    return [pt for pt in admissible_points(s, h, claim.needs_abs) if not claim.holds_at(s, *pt)]


def counterexample_search(s: ClassCStructure, claim: Claim, h: Hypothesis) -> tuple[int, int] | None:
    for p, q in admissible_points(s, h, claim.needs_abs):
        if not claim.holds_at(s, p, q):
            return p, q
    return None


class Relations(frozenset):
    """Set of relations that hold at every admissible point.

    ``vacuous`` is set when there were no admissible points at all, in which
    case every relation is (trivially) included.
    """

    vacuous: bool
    admissible: int

    def __new__(cls, items: Iterable[RelationKind] = (), admissible: int = 0):
        self = super().__new__(cls, items)
        self.admissible = admissible
        self.vacuous = admissible == 0
        return self


def classify_pair(s: ClassCStructure, s1: StatementKind, s2: StatementKind, h: Hypothesis) -> Relations:
    pts = admissible_points(s, h, s1.needs_abs or s2.needs_abs)
    values = [(truth(s, s1, p, q), truth(s, s2, p, q)) for p, q in pts]
    found = [k for k in RelationKind if all(relation_holds(k, v1, v2) for v1, v2 in values)]
    return Relations(found, len(pts))


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    verdict: Verdict
    witness: tuple[int, ...] | None = None
    witness_label: str = "-"
    admissible: int = 0
    violations: int = 0


@dataclass
class VerificationReport:
    shape: str
    subject: str
    hypothesis: Hypothesis
    claims: list[ClaimResult]
    admissible_point_count: int

    @property
    def violated(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.verdict is Verdict.VIOLATED]

    @property
    def ok(self) -> bool:
        return not self.violated

    def result(self, claim: Claim | str) -> ClaimResult:
        key = str(claim)
        for c in self.claims:
            if str(c.claim) == key:
                return c
        raise KeyError(key)

    def to_text(self) -> str:
        lines = [
            f"# shape={self.shape} structure={self.subject} hypothesis={self.hypothesis.flags()} "
            f"admissible_points={self.admissible_point_count}"
        ]
        for c in self.claims:
            s1, s2 = c.claim.pair
            lines.append(
                f"CLAIM shape={self.shape} pair={s1},{s2} relation={c.claim.kind} "
                f"hypothesis={self.hypothesis.flags()} verdict={c.verdict} witness={c.witness_label}"
            )
        counts = {v: sum(c.verdict is v for c in self.claims) for v in Verdict}
        lines.append(
            f"# summary holds={counts[Verdict.HOLDS]} violated={counts[Verdict.VIOLATED]} "
            f"vacuous={counts[Verdict.VACUOUS]} of {len(self.claims)}"
        )
        return "\n".join(lines) + "\n"


def check_claims(
    claims: Sequence[Claim],
    points: Sequence[tuple[int, ...]],
    holds: Callable[[Claim, tuple[int, ...]], bool],
    label: Callable[[tuple[int, ...]], str],
) -> list[ClaimResult]:
    """Generic claim-by-claim evaluation over an explicit list of points."""
    results = []
    for claim in claims:
        bad = [pt for pt in points if not holds(claim, pt)]
        if not points:
            results.append(ClaimResult(claim, Verdict.VACUOUS))
        elif bad:
            results.append(ClaimResult(claim, Verdict.VIOLATED, bad[0], label(bad[0]), len(points), len(bad)))
        else:
            results.append(ClaimResult(claim, Verdict.HOLDS, admissible=len(points)))
    return results


def verify_shape(
    s: ClassCStructure, shape: Shape | str, h: Hypothesis = FORWARD, abs_form: bool = False
) -> VerificationReport:
    claims = expected_claims(shape, h, abs_form)
    all_points = admissible_points(s, h)
    abs_points = [pt for pt in all_points if abs_max(s, pt[1]) is not None]
    results = []
    for claim in claims:
        pts = abs_points if claim.needs_abs else all_points
        results += check_claims(
            [claim], pts, lambda c, pt: c.holds_at(s, *pt), lambda pt: f"P={s.labels[pt[0]]},Q={s.labels[pt[1]]}"
        )
    return VerificationReport(str(Shape(shape)), s.name or "?", h, results, len(all_points))


# ---------------------------------------------------------------- rendering

STATEMENT_TEXT = {
    S.A: "P ⪯ Q",
    S.E: "P ⪯ ¬Q",
    S.I: "P ⋠ ¬Q",
    S.O: "P ⋠ Q",
    S.a: "¬P ⪯ ¬Q",
    S.e: "¬P ⪯ Q",
    S.i: "¬P ⋠ Q",
    S.o: "¬P ⋠ ¬Q",
    S.U: "A ∨ E",
    S.Y: "I ∧ O",
    S.U_ABS: "P ⪯ |Q|",
    S.Y_ABS: "P ⋠ |Q|",
}

EDGE_STYLE = {
    R.SUB_IMPLICATION: 'style=solid, dir=forward',
    R.SUPER_IMPLICATION: 'style=solid, dir=back',
    R.CONTRARY: 'style=dashed, dir=none',
    R.SUBCONTRARY: 'style=dotted, dir=none',
    R.CONTRADICTORY: 'style=bold, dir=none',
}

VERDICT_COLOR = {Verdict.HOLDS: "black", Verdict.VIOLATED: "red", Verdict.VACUOUS: "gray"}

_POSITIONS = {
    Shape.SQUARE: {S.A: (0, 2), S.E: (2, 2), S.I: (0, 0), S.O: (2, 0)},
    Shape.CUBE: {
        S.A: (0, 3), S.E: (3, 3), S.I: (0, 0), S.O: (3, 0),
        S.a: (1.2, 4.2), S.e: (4.2, 4.2), S.i: (1.2, 1.2), S.o: (4.2, 1.2),
    },
    Shape.HEXAGON: {
        S.U: (1.5, 3.6), S.A: (0, 2.4), S.E: (3, 2.4),
        S.I: (0, 0.6), S.O: (3, 0.6), S.Y: (1.5, -0.6),
    },
}


@dataclass(frozen=True)
class Edge:
    claim: Claim
    claimed: bool = True

    @property
    def pair(self):
        return self.claim.pair

    @property
    def relations(self) -> frozenset[RelationKind]:
        return frozenset({self.claim.kind})


@dataclass(frozen=True)
class Diagram:
    shape: Shape
    vertices: tuple[StatementKind, ...]
    edges: tuple[Edge, ...]
    positions: dict = field(default_factory=dict, compare=False, hash=False)


def build_diagram(shape: Shape | str, abs_form: bool = False) -> Diagram:
    shape = Shape(shape)
    edges = tuple(Edge(c) for c in expected_claims(shape, FULL, abs_form))
    if shape is Shape.CUBE:
        edges += tuple(Edge(c, claimed=False) for c in CUBE_FACE_EDGES)
    pos = dict(_POSITIONS[shape])
    if abs_form:
        pos[S.U_ABS], pos[S.Y_ABS] = pos.pop(S.U), pos.pop(S.Y)
    return Diagram(shape, tuple(pos), edges, pos)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(d: Diagram, verdicts: VerificationReport | None = None) -> str:
    """Deterministic DOT text (neato layout, pinned node positions)."""
    by_claim = {str(c.claim): c for c in verdicts.claims} if verdicts else {}
    title = f"{d.shape} of opposition"
    if verdicts:
        title += f" - {verdicts.subject} [{verdicts.hypothesis.flags()}]"
    out = [
        f"digraph {d.shape} {{",
        "  layout=neato;",
        f"  label={_quote(title)};",
        '  node [shape=box, style=rounded, fontname="Helvetica"];',
        '  edge [fontname="Helvetica", fontsize=9];',
    ]
    for v in d.vertices:
        x, y = d.positions[v]
        node = str(v).replace("_abs", "")
        out.append(f'  {node} [label={_quote(f"{node}: {STATEMENT_TEXT[v]}")}, pos="{x:g},{y:g}!"];')
    for edge in d.edges:
        s1, s2 = (str(x).replace("_abs", "") for x in edge.pair)
        attrs = [EDGE_STYLE[edge.claim.kind], f"label={_quote(str(edge.claim.kind))}"]
        res = by_claim.get(str(edge.claim)) if edge.claimed else None
        if res is not None:
            attrs.append(f"color={VERDICT_COLOR[res.verdict]}")
            if res.verdict is Verdict.VIOLATED:
                attrs.append(f"xlabel={_quote(res.witness_label)}")
        elif not edge.claimed:
            attrs.append("color=gray50")
        out.append(f"  {s1} -> {s2} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
