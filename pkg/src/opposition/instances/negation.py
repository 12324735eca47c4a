"""Strong negations on [0, 1] generated as ``phi^-1(1 - phi(x))``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

__all__ = ["NegationGenerator", "fixed_point", "load_generator", "strong_negation"]


@dataclass(frozen=True)
class NegationGenerator:
    phi: Callable[[np.ndarray], np.ndarray]
    phi_inv: Callable[[np.ndarray], np.ndarray]
    name: str = "phi"
    tolerance: float = 1e-9

    def __post_init__(self):
        grid = np.linspace(0.0, 1.0, 1001)
        vals = self.phi(grid)
        if abs(vals[0]) > self.tolerance or abs(vals[-1] - 1.0) > self.tolerance:
            raise ValueError(f"{self.name}: phi must fix 0 and 1")
        if np.any(np.diff(vals) <= 0):
            raise ValueError(f"{self.name}: phi must be strictly increasing")

    @classmethod
    def identity(cls) -> NegationGenerator:
        return cls(lambda x: np.asarray(x, dtype=float), lambda y: np.asarray(y, dtype=float), "identity")

    @classmethod
    def power(cls, p: float) -> NegationGenerator:
        if p <= 0:
            raise ValueError("power generator needs p > 0")
        return cls(lambda x: np.power(x, p), lambda y: np.power(y, 1.0 / p), f"power(p={p:g})")

    @classmethod
    def table(cls, xs: Sequence[float], ys: Sequence[float]) -> NegationGenerator:
        """Piecewise-linear phi through the points (xs, ys)."""
        xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
        if xs.shape != ys.shape or xs.size < 2:
            raise ValueError("table needs matching xs and ys with at least two points")
        if np.any(np.diff(xs) <= 0) or np.any(np.diff(ys) <= 0):
            raise ValueError("table must be strictly increasing in both coordinates")
        return cls(lambda x: np.interp(x, xs, ys), lambda y: np.interp(y, ys, xs), "table")


def strong_negation(g: NegationGenerator, x):
    x_arr = np.asarray(x, dtype=float)
    if np.any((x_arr < 0) | (x_arr > 1)):
        raise ValueError("strong negation is defined on [0, 1]")
    out = g.phi_inv(1.0 - g.phi(x_arr))
    return float(out) if np.ndim(out) == 0 else out


def fixed_point(g: NegationGenerator) -> float:
    """``phi^-1(1/2)``; the zero set is ``[fixed_point, 1]``."""
    return float(g.phi_inv(np.asarray(0.5)))


def load_generator(doc: Mapping) -> NegationGenerator:
    """``{"kind": "power", "p": 2.0}`` or ``{"kind": "table", "xs": [...], "ys": [...]}``"""
    kind = doc.get("kind")
    if kind == "power":
        return NegationGenerator.power(float(doc["p"]))
    if kind == "identity":
        return NegationGenerator.identity()
    if kind == "table":
        return NegationGenerator.table(doc["xs"], doc["ys"])
    raise ValueError(f"unknown generator kind {kind!r}")
