"""Building blocks for closed-form right-hand sides.

``a`` is the direction whose harmonic is conjugated, ``b`` the other one;
``x = a.b`` and ``v = a x b``.
"""
from __future__ import annotations

import math

import numpy as np

from ..poly import Direction, legendre_derivs
from ..tensor import LEVI_CIVITA, PAULI, _sym_array, apply_projector, projector_spinor

FOUR_PI = 4 * math.pi
DELTA = np.eye(3)
EPS = LEVI_CIVITA
SIGMA = PAULI


class Geometry:
    """x, v, Legendre derivatives and bracket tensors for a direction pair."""

    def __init__(self, a: Direction, b: Direction, lmax: int = 0, kmax: int = 0):
        self.da, self.db = a, b
        self.a = np.array(a.vector, dtype=float)
        self.b = np.array(b.vector, dtype=float)
        self.x = float(np.clip(self.a @ self.b, -1.0, 1.0))
        self.v = np.cross(self.a, self.b)
        self._table = legendre_derivs(max(lmax, 1), max(kmax, 1), self.x)
        self._lmax, self._kmax = max(lmax, 1), max(kmax, 1)

    def P(self, l: int, k: int = 0) -> float:
        """k-th derivative of P_l at x (zero for l < 0 or k > l)."""
        if l < 0 or k > l:
            return 0.0
        if l > self._lmax or k > self._kmax:
            self._lmax, self._kmax = max(l, self._lmax), max(k, self._kmax)
            self._table = legendre_derivs(self._lmax, self._kmax, self.x)
        return float(self._table[k, l])

    @staticmethod
    def s(*vecs) -> np.ndarray:
        """{v1 ... vn}"""
        return _sym_array(vecs)

    @staticmethod
    def s0(*vecs) -> np.ndarray:
        """{v1 ... vn}_0"""
        return apply_projector(len(vecs), _sym_array(vecs))

    @staticmethod
    def anti(u, w) -> np.ndarray:
        """[u w]"""
        return np.multiply.outer(u, w) - np.multiply.outer(w, u)

    @staticmethod
    def pm(vec, m: int) -> complex:
        """y^m = y^1 + i m y^2 for m = +-1."""
        return complex(vec[0] + 1j * m * vec[1])


def sandwich32(inner: np.ndarray) -> np.ndarray:
    """X^{ih}_{AC} M^{h C k D} X^{kj}_{DB} with layout (i, A, j, B)."""
    x = projector_spinor(1)
    return np.einsum("iAhC,hCkD,kDjB->iAjB", x, inner, x)


def left32(inner: np.ndarray) -> np.ndarray:
    """X^{ik}_{AC} M^{k C B} -> (i, A, B)."""
    return np.einsum("iAkC,kCB->iAB", projector_spinor(1), inner)


def right32(inner: np.ndarray) -> np.ndarray:
    """M^{k A C} X^{ki}_{CB} -> (A, i, B)."""
    return np.einsum("kAC,kCiB->AiB", inner, projector_spinor(1))


def dot_sigma(vec) -> np.ndarray:
    """vec . sigma_{AB}"""
    return np.einsum("k,kab->ab", vec, SIGMA)
