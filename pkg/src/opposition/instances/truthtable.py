"""Truth vectors of propositional formulas and their arithmetic relations.

Row ``r`` of a truth vector encodes an assignment with the first variable as
the most significant bit, so over ``[P, Q]`` the rows are
``(0,0), (0,1), (1,0), (1,1)``.
"""
from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from ..diagrams import Claim, RelationKind, VerificationReport, Hypothesis, check_claims
from ..statements import StatementKind

__all__ = [
    "And",
    "Formula",
    "Implies",
    "Not",
    "Or",
    "TruthVector",
    "Var",
    "parse_formula",
    "prop_square",
    "truth_vector",
    "tv_classify",
    "tv_relation",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Not, And, Or, Implies]


def evaluate(f: Formula, env: dict[str, bool]) -> bool:
    if isinstance(f, Var):
        if f.name not in env:
            raise KeyError(f"unknown variable {f.name!r}")
        return env[f.name]
    if isinstance(f, Not):
        return not evaluate(f.arg, env)
    left = evaluate(f.left, env)
    right = evaluate(f.right, env)
    if isinstance(f, And):
        return left and right
    if isinstance(f, Or):
        return left or right
    return right or not left


def parse_formula(text: str) -> Formula:
    """Parse ``~P``, ``P & Q``, ``P | Q`` and ``P >> Q`` (implication)."""
    ops = {ast.BitAnd: And, ast.BitOr: Or, ast.RShift: Implies}

    def conv(node) -> Formula:
        if isinstance(node, ast.Name):
            return Var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.Invert, ast.Not)):
            return Not(conv(node.operand))
        if isinstance(node, ast.BinOp) and type(node.op) in ops:
            return ops[type(node.op)](conv(node.left), conv(node.right))
        raise ValueError(f"unsupported syntax in formula {text!r}")

    try:
        tree = ast.parse(text.replace("->", ">>"), mode="eval")
    except SyntaxError:
        raise ValueError(f"cannot parse formula {text!r}") from None
    return conv(tree.body)


@dataclass(frozen=True)
class TruthVector:
    bits: tuple[int, ...]
    var_order: tuple[str, ...]

    def __post_init__(self):
        if len(self.bits) != 2 ** len(self.var_order):
            raise ValueError("truth vector length must be 2**len(var_order)")


def truth_vector(formula: Formula | str, variables: Sequence[str]) -> TruthVector:
    if isinstance(formula, str):
        formula = parse_formula(formula)
    variables = tuple(variables)
    bits = []
    for row in itertools.product((False, True), repeat=len(variables)):
        bits.append(int(evaluate(formula, dict(zip(variables, row)))))
    return TruthVector(tuple(bits), variables)


def tv_relation(t1: TruthVector, t2: TruthVector, kind: RelationKind) -> bool:
    if len(t1.bits) != len(t2.bits):
        raise ValueError("truth vectors differ in length")
    pairs = list(zip(t1.bits, t2.bits))
    if kind is RelationKind.CONTRARY:
        return all(a + b <= 1 for a, b in pairs)
    if kind is RelationKind.SUBCONTRARY:
        return all(a + b >= 1 for a, b in pairs)
    if kind is RelationKind.CONTRADICTORY:
        return all(a == 1 - b for a, b in pairs)
    if kind is RelationKind.SUB_IMPLICATION:
        return all(a <= b for a, b in pairs)
    return all(a >= b for a, b in pairs)


def tv_classify(t1: TruthVector, t2: TruthVector) -> frozenset[RelationKind]:
    return frozenset(k for k in RelationKind if tv_relation(t1, t2, k))


S = StatementKind
R = RelationKind

# the propositional square has A/E on the bottom: implications run upward
PROP_SQUARE_CLAIMS = (
    Claim(R.SUB_IMPLICATION, (S.I, S.A), Hypothesis()),
    Claim(R.SUB_IMPLICATION, (S.O, S.E), Hypothesis()),
    Claim(R.CONTRARY, (S.I, S.O), Hypothesis()),
    Claim(R.SUBCONTRARY, (S.A, S.E), Hypothesis()),
    Claim(R.CONTRADICTORY, (S.A, S.O), Hypothesis()),
    Claim(R.CONTRADICTORY, (S.E, S.I), Hypothesis()),
)


def prop_vertices(var_p: str = "P", var_q: str = "Q") -> dict[StatementKind, TruthVector]:
    p, q = Var(var_p), Var(var_q)
    vs = (var_p, var_q)
    return {
        S.A: truth_vector(Implies(p, q), vs),
        S.E: truth_vector(Implies(p, Not(q)), vs),
        S.I: truth_vector(And(p, q), vs),
        S.O: truth_vector(And(p, Not(q)), vs),
    }


def prop_square(var_p: str = "P", var_q: str = "Q") -> VerificationReport:
    """Check the swapped square on the four truth vectors, row by row."""
    vec = prop_vertices(var_p, var_q)
    rows = [(r,) for r in range(4)]

    def holds(claim: Claim, pt) -> bool:
        s1, s2 = claim.pair
        # a single row is a 1-vector; the relation must hold on it
        one = lambda s: TruthVector((vec[s].bits[pt[0]],), ())  # noqa: E731
        return tv_relation(one(s1), one(s2), claim.kind)

    results = check_claims(PROP_SQUARE_CLAIMS, rows, holds, lambda pt: f"row={pt[0]}")
    return VerificationReport("prop-square", f"truth-table({var_p},{var_q})", Hypothesis(), results, len(rows))
