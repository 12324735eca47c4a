"""The opposition statements evaluated at a point (P, Q) of a structure."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import ClassCStructure

__all__ = [
    "AbsUndefined",
    "StatementContext",
    "StatementKind",
    "abs_max",
    "compound_reduction_equivalent",
    "eval_statement",
    "truth",
    "truth_with",
]


class AbsUndefined(ValueError):
    """|Q| requested where Q and its negation are incomparable."""


class StatementKind(str, Enum):
    A = "A"
    E = "E"
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741
    a = "a"
    e = "e"
    i = "i"
    o = "o"
    U = "U"
    Y = "Y"
    U_ABS = "U_abs"
    Y_ABS = "Y_abs"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, tag: str, abs_form: bool = False) -> StatementKind:
        """Map a CLI tag to a kind; ``U``/``Y`` become the |Q| form when ``abs_form``."""
        kind = cls(tag)
        if abs_form and kind in (cls.U, cls.Y):
            kind = cls.U_ABS if kind is cls.U else cls.Y_ABS
        return kind

    @property
    def needs_abs(self) -> bool:
        return self in (StatementKind.U_ABS, StatementKind.Y_ABS)


S = StatementKind


@dataclass(frozen=True)
class StatementContext:
    structure: ClassCStructure
    P: int
    Q: int

    def __post_init__(self):
        n = len(self.structure)
        if not (0 <= self.P < n and 0 <= self.Q < n):
            raise ValueError("P and Q must be elements of the structure")


def abs_max(s: ClassCStructure, q: int) -> int | None:
    """Larger of ``q`` and ``neg(q)``, or ``None`` when they are incomparable."""
    nq = s.neg[q]
    if s.le(q, nq):
        return nq
    if s.le(nq, q):
        return q
    return None


def truth(s: ClassCStructure, kind: StatementKind, p: int, q: int) -> bool:
    le, neg = s.leq, s.neg
    if kind is S.A:
        return le[p][q]
    if kind is S.E:
        return le[p][neg[q]]
    if kind is S.I:
        return not le[p][neg[q]]
    if kind is S.O:
        return not le[p][q]
    np_ = neg[p]
    if kind is S.a:
        return le[np_][neg[q]]
    if kind is S.e:
        return le[np_][q]
    if kind is S.i:
        return not le[np_][q]
    if kind is S.o:
        return not le[np_][neg[q]]
    if kind is S.U:
        return le[p][q] or le[p][neg[q]]
    if kind is S.Y:
        return not le[p][q] and not le[p][neg[q]]
    r = abs_max(s, q)
    if r is None:
        raise AbsUndefined(f"|{s.labels[q]}| undefined: {s.labels[q]} and its negation are incomparable")
    return le[p][r] if kind is S.U_ABS else not le[p][r]


def eval_statement(ctx: StatementContext, kind: StatementKind) -> bool:
    return truth(ctx.structure, kind, ctx.P, ctx.Q)


def compound_reduction_equivalent(s: ClassCStructure, p: int, q: int) -> bool:
    """Whether U/Y agree with their |Q| forms at (p, q); raises if |q| is undefined."""
    return truth(s, S.U, p, q) == truth(s, S.U_ABS, p, q) and truth(s, S.Y, p, q) == truth(s, S.Y_ABS, p, q)


def truth_with(le, neg, kind: StatementKind, p, q) -> bool:
    """Statement truth for predicate-style carriers given ``le(x, y)`` and ``neg(x)``.

    ``U_abs``/``Y_abs`` are not supported here; use the compound forms.
    """
    if kind in (S.A, S.E, S.I, S.O, S.U, S.Y):
        up, unq = le(p, q), le(p, neg(q))
        return {S.A: up, S.E: unq, S.I: not unq, S.O: not up, S.U: up or unq, S.Y: not up and not unq}[kind]
    if kind.needs_abs:
        raise AbsUndefined("|Q| statements need a finite structure")
    np_ = neg(p)
    return {
        S.a: lambda: le(np_, neg(q)),
        S.e: lambda: le(np_, q),
        S.i: lambda: not le(np_, q),
        S.o: lambda: not le(np_, neg(q)),
    }[kind]()
