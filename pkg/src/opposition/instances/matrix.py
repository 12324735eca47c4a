"""Complex square matrices ordered by the Hermitian part of their difference.

``A <= B`` iff ``(B - A) + (B - A)^H`` is positive semidefinite, tested as
smallest eigenvalue >= -eps.  This is a preorder: any nonzero skew-Hermitian
difference makes two distinct matrices mutually below each other.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MatrixOrderConfig",
    "antisymmetry_witness",
    "hermitian_part",
    "load_matrix",
    "matrix_leq",
    "matrix_neg",
    "matrix_zero_member",
    "matrix_zero_member_stated",
    "zero_discrepancy",
]


@dataclass(frozen=True)
class MatrixOrderConfig:
    dimension: int
    tolerance: float | None = None  # absolute eps; None -> rel_tol * scale
    rel_tol: float = 1e-9

    def __post_init__(self):
        if self.tolerance is not None and self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        if self.rel_tol < 0:
            raise ValueError("rel_tol must be nonnegative")

    def eps(self, h: np.ndarray) -> float:
        if self.tolerance is not None:
            return self.tolerance
        scale = max(1.0, float(np.abs(h).max(initial=0.0)))
        return self.rel_tol * scale


def _check(m, cfg: MatrixOrderConfig) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.shape != (cfg.dimension, cfg.dimension):
        raise ValueError(f"expected {cfg.dimension}x{cfg.dimension} matrix, got shape {m.shape}")
    return m


def hermitian_part(m: np.ndarray) -> np.ndarray:
    """``M + M^H`` (no factor 1/2)."""
    return m + m.conj().T


def _psd(h: np.ndarray, cfg: MatrixOrderConfig) -> bool:
    return bool(np.linalg.eigvalsh(h).min() >= -cfg.eps(h))


def matrix_leq(a, b, cfg: MatrixOrderConfig) -> bool:
    a, b = _check(a, cfg), _check(b, cfg)
    return _psd(hermitian_part(b - a), cfg)


def matrix_neg(a) -> np.ndarray:
    return -np.asarray(a, dtype=complex)


def matrix_zero_member(a, cfg: MatrixOrderConfig) -> bool:
    """``neg(A) <= A``, i.e. ``A + A^H`` positive semidefinite."""
    a = _check(a, cfg)
    return _psd(hermitian_part(a), cfg)


def matrix_zero_member_stated(a, cfg: MatrixOrderConfig) -> bool:
    """The narrower zero set ``A + A^H = 0`` (within eps)."""
    a = _check(a, cfg)
    h = hermitian_part(a)
    return bool(np.abs(h).max(initial=0.0) <= cfg.eps(h))


def zero_discrepancy(a, cfg: MatrixOrderConfig) -> dict | None:
    """Report when the two zero-set readings disagree on ``a``; ``None`` otherwise."""
    general, stated = matrix_zero_member(a, cfg), matrix_zero_member_stated(a, cfg)
    if general == stated:
        return None
    return {
        "matrix": np.asarray(a, dtype=complex).tolist(),
        "neg_a_leq_a": general,
        "hermitian_part_zero": stated,
    }


def antisymmetry_witness(n: int, rng: np.random.Generator | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Two distinct n x n matrices with ``A <= B`` and ``B <= A``.

    ``B - A`` is a random nonzero skew-Hermitian matrix.
    """
    rng = rng or np.random.default_rng(0)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    skew = g - g.conj().T
    if not np.any(skew):
        skew = 1j * np.eye(n)
    return a, a + skew


def load_matrix(rows) -> np.ndarray:
    """Row-major nested lists of ``[re, im]`` pairs."""
    try:
        m = np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)
    except (TypeError, ValueError):
        raise ValueError("matrix must be rows of [re, im] pairs") from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    return m
