"""Carriers with an involutive negation and a partial order.

A structure is a finite set of labelled elements together with an order
table ``leq`` (``leq[i][j]`` means element ``i`` is below element ``j``)
and a negation map ``neg``.  :func:`admit` checks the class-C axioms
(involution, partial order, antitone negation, nonempty zero set) and
returns a :class:`ClassCStructure`.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "ClassCStructure",
    "ElementId",
    "NotInClassC",
    "RawStructure",
    "StructureError",
    "admit",
    "close_order",
    "dump_structure",
    "load_structure",
    "parse_structure",
    "product",
    "validate_axioms",
    "zeros",
]

AXIOMS = ("involution", "reflexive", "antisymmetric", "transitive", "antitone", "zeros_nonempty")


class StructureError(ValueError):
    """Malformed structure input (bad table shapes, unknown labels, ...)."""


class NotInClassC(Exception):
    """Raised by :func:`admit` when an axiom fails."""

    def __init__(self, report: AxiomReport, name: str = ""):
        self.report = report
        failed = ", ".join(report.failed())
        super().__init__(f"structure {name!r} is not in class C: {failed}")


class ElementId(NamedTuple):
    index: int
    label: str


@dataclass(frozen=True)
class RawStructure:
    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    neg: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise StructureError("element labels must be unique")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise StructureError(f"order table must be {n}x{n}")
        if len(self.neg) != n or any(not 0 <= v < n for v in self.neg):
            raise StructureError("negation must map every element into the carrier")

    @classmethod
    def build(cls, labels: Sequence[str], leq, neg: Sequence[int], name: str = "") -> RawStructure:
        return cls(tuple(labels), tuple(tuple(bool(v) for v in row) for row in leq), tuple(int(v) for v in neg), name)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> tuple[ElementId, ...]:
        return tuple(ElementId(i, lab) for i, lab in enumerate(self.labels))

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < len(self.labels):
                raise StructureError(f"element index {label} out of range")
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError(f"unknown element {label!r}") from None

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def comparable(self, a: int, b: int) -> bool:
        return self.leq[a][b] or self.leq[b][a]

    def fmt(self, *indices: int) -> str:
        return ", ".join(self.labels[i] for i in indices)


@dataclass(frozen=True)
class ClassCStructure(RawStructure):
    zeros: frozenset[int] = field(default=frozenset())

    @property
    def zero_elements(self) -> frozenset[ElementId]:
        return frozenset(ElementId(i, self.labels[i]) for i in self.zeros)


@dataclass
class AxiomReport:
    involution_ok: bool
    reflexive_ok: bool
    antisymmetric_ok: bool
    transitive_ok: bool
    antitone_ok: bool
    zeros_nonempty_ok: bool
    witnesses: dict[str, list[tuple[int, ...]]]

    @property
    def ok(self) -> bool:
        return not self.failed()

    def failed(self) -> list[str]:
        return [ax for ax in AXIOMS if not getattr(self, f"{ax}_ok")]

    def describe(self, s: RawStructure) -> str:
        lines = []
        for ax in AXIOMS:
            flag = getattr(self, f"{ax}_ok")
            line = f"{ax:15s} {'ok' if flag else 'FAIL'}"
            if not flag:
                shown = "; ".join(f"({s.fmt(*w)})" for w in self.witnesses[ax][:5])
                line += f"  witnesses: {shown}"
            lines.append(line)
        return "\n".join(lines)


def falsifies(s: RawStructure, axiom: str, witness: tuple[int, ...]) -> bool:
    """Re-evaluate a single witness against its axiom."""
    le, neg = s.le, s.neg
    if axiom == "involution":
        (x,) = witness
        return neg[neg[x]] != x
    if axiom == "reflexive":
        (x,) = witness
        return not le(x, x)
    if axiom == "antisymmetric":
        a, b = witness
        return a != b and le(a, b) and le(b, a)
    if axiom == "transitive":
        a, b, c = witness
        return le(a, b) and le(b, c) and not le(a, c)
    if axiom == "antitone":
        a, b = witness
        return le(a, b) != le(neg[b], neg[a])
    if axiom == "zeros_nonempty":
        (x,) = witness
        return not le(neg[x], x)
    raise KeyError(axiom)


def validate_axioms(s: RawStructure) -> AxiomReport:
    n = len(s)
    le, neg = s.le, s.neg
    rng = range(n)
    w: dict[str, list[tuple[int, ...]]] = {ax: [] for ax in AXIOMS}
    for x in rng:
        if neg[neg[x]] != x:
            w["involution"].append((x,))
        if not le(x, x):
            w["reflexive"].append((x,))
        if not le(neg[x], x):
            w["zeros_nonempty"].append((x,))
    for a, b in itertools.product(rng, rng):
        if a < b and le(a, b) and le(b, a):
            w["antisymmetric"].append((a, b))
        if le(a, b) != le(neg[b], neg[a]):
            w["antitone"].append((a, b))
        if le(a, b):
            w["transitive"].extend((a, b, c) for c in rng if le(b, c) and not le(a, c))
    # a nonempty zero set only fails when *every* element is a witness
    if len(w["zeros_nonempty"]) < n:
        w["zeros_nonempty"] = []
    return AxiomReport(*(not w[ax] for ax in AXIOMS), witnesses={k: v for k, v in w.items() if v})


def zero_indices(s: RawStructure) -> frozenset[int]:
    return frozenset(x for x in range(len(s)) if s.le(s.neg[x], x))


def admit(s: RawStructure) -> ClassCStructure:
    report = validate_axioms(s)
    if not report.ok:
        raise NotInClassC(report, s.name)
    return ClassCStructure(s.labels, s.leq, s.neg, s.name, zeros=zero_indices(s))


def zeros(s: ClassCStructure) -> frozenset[ElementId]:
    return s.zero_elements


def product(parts: Sequence[ClassCStructure], name: str = "") -> ClassCStructure:
    """Componentwise order and negation on the Cartesian product."""
    if not parts:
        raise ValueError("product of an empty list of structures")
    tuples = list(itertools.product(*(range(len(p)) for p in parts)))
    pos = {t: k for k, t in enumerate(tuples)}
    labels = [",".join(p.labels[i] for p, i in zip(parts, t)) for t in tuples]
    if len(parts) > 1:
        labels = [f"({lab})" for lab in labels]
    leq = [[all(p.le(i, j) for p, i, j in zip(parts, s, t)) for t in tuples] for s in tuples]
    neg = [pos[tuple(p.neg[i] for p, i in zip(parts, t))] for t in tuples]
    name = name or " x ".join(p.name or "?" for p in parts)
    return admit(RawStructure.build(labels, leq, neg, name))


def close_order(pairs: Iterable[tuple[int, int]], kind: str = "cover", n: int = 0) -> tuple[tuple[bool, ...], ...]:
    """Order table from explicit pairs.

    ``cover`` takes the reflexive-transitive closure; ``full`` keeps the pairs
    as given and only adds the diagonal.  Antisymmetry is not enforced.
    """
    if kind not in ("cover", "full"):
        raise ValueError(f"unknown order kind {kind!r}")
    m = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise StructureError(f"order pair ({a}, {b}) out of range for {n} elements")
        m[a][b] = True
    if kind == "cover":
        # Warshall
        for k in range(n):
            mk = m[k]
            for i in range(n):
                if m[i][k]:
                    mi = m[i]
                    for j in range(n):
                        if mk[j]:
                            mi[j] = True
    return tuple(tuple(row) for row in m)


def parse_structure(doc: dict) -> RawStructure:
    try:
        labels = [str(e) for e in doc["elements"]]
        neg_map = doc["neg"]
        order = doc.get("order", {})
    except (KeyError, TypeError) as exc:
        raise StructureError(f"missing field in structure document: {exc}") from None
    idx = {lab: i for i, lab in enumerate(labels)}
    if len(idx) != len(labels):
        raise StructureError("element labels must be unique")

    def lookup(lab) -> int:
        if str(lab) not in idx:
            raise StructureError(f"unknown element {lab!r}")
        return idx[str(lab)]

    unknown = set(map(str, neg_map)) - set(labels)
    if unknown:
        raise StructureError(f"unknown element(s) in neg: {sorted(unknown)}")
    missing = [lab for lab in labels if lab not in neg_map]
    if missing:
        raise StructureError(f"neg is not total, missing {missing}")
    neg = [lookup(neg_map[lab]) for lab in labels]
    pairs = []
    for pair in order.get("pairs", []):
        if len(pair) != 2:
            raise StructureError(f"order pair must have two entries: {pair!r}")
        pairs.append((lookup(pair[0]), lookup(pair[1])))
    leq = close_order(pairs, order.get("kind", "cover"), len(labels))
    return RawStructure(tuple(labels), leq, tuple(neg), str(doc.get("name", "")))


def load_structure(path: str | Path) -> RawStructure:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: invalid JSON ({exc})") from None
    s = parse_structure(doc)
    if not s.name:
        s = RawStructure(s.labels, s.leq, s.neg, path.stem)
    return s


def dump_structure(s: RawStructure) -> dict:
    n = len(s)
    pairs = [[s.labels[i], s.labels[j]] for i in range(n) for j in range(n) if i != j and s.le(i, j)]
    return {
        "name": s.name,
        "elements": list(s.labels),
        "neg": {s.labels[i]: s.labels[s.neg[i]] for i in range(n)},
        "order": {"kind": "full", "pairs": pairs},
    }
