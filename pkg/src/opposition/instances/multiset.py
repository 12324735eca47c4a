"""Signed multisets whose multiplicities live in a class-C structure.

The default multiplicity structure is the integers with ``<=`` and
``neg(m) = -m`` (a group under addition).  Any finite admitted structure can
also serve as multiplicities via :meth:`MultiplicityConfig.from_structure`.

The order is pointwise over the union of the key sets, absent keys reading
as the designated zero.  :func:`multiset_leq_literal` keeps the one-sided
rule (only keys of ``B`` are constrained) for comparison: under it
``{x: 1}`` and ``{}`` are below each other.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Mapping

from ..core import ClassCStructure

__all__ = [
    "INTEGERS",
    "MultiplicityConfig",
    "SignedMultiset",
    "UnsupportedOperation",
    "classical_complement",
    "load_multiset",
    "multiset_leq",
    "multiset_leq_literal",
    "multiset_neg",
    "multiset_union",
]


class UnsupportedOperation(TypeError):
    pass


@dataclass(frozen=True)
class MultiplicityConfig:
    leq: Callable[[Any, Any], bool]
    neg: Callable[[Any], Any]
    zero: Any
    op: Callable[[Any, Any], Any] | None = None
    contains: Callable[[Any], bool] = lambda m: True
    name: str = "M"

    def __post_init__(self):
        if not self.leq(self.neg(self.zero), self.zero):
            raise ValueError("designated zero must satisfy neg(0) <= 0")

    def check(self, m) -> None:
        if not self.contains(m):
            raise ValueError(f"multiplicity {m!r} is not an element of {self.name}")

    @classmethod
    def from_structure(cls, s: ClassCStructure, zero: str) -> MultiplicityConfig:
        """Multiplicities are the element labels of ``s``; no group operation."""
        idx = {lab: i for i, lab in enumerate(s.labels)}
        if idx[zero] not in s.zeros:
            raise ValueError(f"{zero!r} is not a zero of {s.name}")
        return cls(
            leq=lambda a, b: s.le(idx[a], idx[b]),
            neg=lambda a: s.labels[s.neg[idx[a]]],
            zero=zero,
            contains=lambda m: m in idx,
            name=s.name or "M",
        )


INTEGERS = MultiplicityConfig(
    leq=operator.le,
    neg=operator.neg,
    zero=0,
    op=operator.add,
    contains=lambda m: isinstance(m, int) and not isinstance(m, bool),
    name="Z",
)


@dataclass(frozen=True)
class SignedMultiset:
    """Canonical mapping key -> multiplicity; keys at the zero multiplicity are dropped."""

    entries: tuple[tuple[Hashable, Any], ...]

    @classmethod
    def of(cls, entries: Mapping[Hashable, Any] | None = None, m: MultiplicityConfig = INTEGERS) -> SignedMultiset:
        entries = dict(entries or {})
        for v in entries.values():
            m.check(v)
        kept = ((k, v) for k, v in entries.items() if v != m.zero)
        return cls(tuple(sorted(kept, key=lambda kv: repr(kv[0]))))

    def get(self, key, m: MultiplicityConfig = INTEGERS):
        return dict(self.entries).get(key, m.zero)

    def keys(self) -> set:
        return {k for k, _ in self.entries}

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{k}: {v}" for k, v in self.entries) + "}"


def multiset_leq(a: SignedMultiset, b: SignedMultiset, m: MultiplicityConfig = INTEGERS) -> bool:
    da, db = a.as_dict(), b.as_dict()
    for k in da.keys() | db.keys():
        ka, kb = da.get(k, m.zero), db.get(k, m.zero)
        m.check(ka)
        m.check(kb)
        if not m.leq(ka, kb):
            return False
    return True


def multiset_leq_literal(a: SignedMultiset, b: SignedMultiset, m: MultiplicityConfig = INTEGERS) -> bool:
    """One-sided rule: each key of ``b`` is compared, keys only in ``a`` are ignored."""
    da = a.as_dict()
    for k, r in b.entries:
        if k in da:
            if not m.leq(da[k], r):
                return False
        elif not m.leq(m.zero, r):
            return False
    return True


def multiset_neg(a: SignedMultiset, m: MultiplicityConfig = INTEGERS) -> SignedMultiset:
    return SignedMultiset.of({k: m.neg(v) for k, v in a.entries}, m)


def multiset_union(a: SignedMultiset, b: SignedMultiset, m: MultiplicityConfig = INTEGERS) -> SignedMultiset:
    """Additive union: multiplicities combined keywise with the group operation."""
    if m.op is None:
        raise UnsupportedOperation(f"multiplicities {m.name} carry no group operation")
    da, db = a.as_dict(), b.as_dict()
    return SignedMultiset.of({k: m.op(da.get(k, m.zero), db.get(k, m.zero)) for k in da.keys() | db.keys()}, m)


def _characteristic(a: SignedMultiset) -> bool:
    return all(v == 1 for _, v in a.entries)


def classical_complement(a: SignedMultiset, universe: SignedMultiset) -> SignedMultiset:
    """Set complement as ``universe (+) neg(a)`` over integer multiplicities."""
    if not _characteristic(universe):
        raise ValueError("universe must have multiplicity 1 on every key")
    if not _characteristic(a):
        raise ValueError(f"{a!r} is not a characteristic multiset")
    if not a.keys() <= universe.keys():
        raise ValueError(f"{a!r} has keys outside the universe")
    return multiset_union(universe, multiset_neg(a))


def load_multiset(doc: Mapping) -> SignedMultiset:
    """``{"entries": {key: integer, ...}}``"""
    try:
        return SignedMultiset.of(doc["entries"], INTEGERS)
    except KeyError:
        raise ValueError("multiset document needs an 'entries' mapping") from None
