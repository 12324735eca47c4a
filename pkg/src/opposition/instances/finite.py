"""Small finite structures used throughout the examples and tests."""
from __future__ import annotations

from ..core import ClassCStructure, RawStructure, admit, close_order


def three_valued() -> ClassCStructure:
    """{0, 1/2, 1} with the usual order and neg(x) = 1 - x; ``h`` stands for 1/2."""
    return admit(RawStructure(("0", "h", "1"), close_order([(0, 1), (1, 2)], "cover", 3), (2, 1, 0), "T3"))


def boolean() -> ClassCStructure:
    return admit(RawStructure(("0", "1"), close_order([(0, 1)], "cover", 2), (1, 0), "B2"))


def diamond() -> ClassCStructure:
    """0 < a, b < 1 with negation swapping 0<->1 and a<->b (a, b incomparable)."""
    leq = close_order([(0, 1), (0, 2), (1, 3), (2, 3)], "cover", 4)
    return admit(RawStructure(("0", "a", "b", "1"), leq, (3, 2, 1, 0), "D4"))


def swap_antichain() -> RawStructure:
    """Two incomparable points exchanged by negation; has no zeros."""
    return RawStructure(("p", "q"), close_order([], "full", 2), (1, 0), "antichain2")
