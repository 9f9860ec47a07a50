"""Brute-force left-hand sides: finite sums over magnetic quantum numbers."""
from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from ..angular import HalfLike, half
from ..harmonics import spin_harmonic_block
from ..poly import Direction, spherical_harmonics_row

Weight = Callable[[int], float]


def scalar_sum(lp: int, l: int, shift: int, weight: Optional[Weight],
               a: Direction, b: Direction) -> complex:
    """sum_{lz} w(lz) Y_{lp, lz+shift}(b) conj(Y_{l lz}(a)).

    Terms where either harmonic vanishes (|m| > degree) are skipped, so the
    weight is only evaluated where it is meaningful.
    """
    if l < 0 or lp < 0:
        return 0j
    yb = spherical_harmonics_row(lp, b)
    ya = spherical_harmonics_row(l, a)
    total = 0j
    for lz in range(-l, l + 1):
        mz = lz + shift
        if abs(mz) > lp:
            continue
        w = 1.0 if weight is None else weight(lz)
        total += w * yb[mz + lp] * np.conj(ya[lz + l])
    return complex(total)


def scalar_tensor_sum(lp: int, rank: int, l: int, weight: Optional[Weight],
                      a: Direction, b: Direction) -> np.ndarray:
    """sum_{lz} w(lz) Y^{lp, rank}_{l lz}(b) conj(Y_{l lz}(a)) as a rank-`rank` array."""
    shape = (3,) * rank
    if l < 0 or lp < 0:
        return np.zeros(shape, dtype=complex)
    block = spin_harmonic_block(lp, rank, l, b)
    ya = spherical_harmonics_row(l, a)
    w = np.ones(2 * l + 1) if weight is None else np.array([weight(lz) for lz in range(-l, l + 1)])
    return np.tensordot(w * np.conj(ya), block, axes=([0], [0]))


def tensor_scalar_sum(ln: int, rank: int, l: int, a: Direction, b: Direction) -> np.ndarray:
    """sum_{l'z} Y_{ln l'z}(b) conj(Y^{l, rank}_{ln l'z}(a))."""
    shape = (3,) * rank
    if ln < 0 or l < 0:
        return np.zeros(shape, dtype=complex)
    block = spin_harmonic_block(l, rank, ln, a)
    yb = spherical_harmonics_row(ln, b)
    return np.tensordot(yb, np.conj(block), axes=([0], [0]))


def seed_sum(lp: int, sp: HalfLike, l: int, s: HalfLike, j: HalfLike,
             a: Direction, b: Direction) -> np.ndarray:
    """sum_{jz} Y^{lp sp}_{j jz}(b) (x) conj(Y^{l s}_{j jz}(a)).

    Layout: indices of the first harmonic, then those of the second.
    """
    left = spin_harmonic_block(lp, sp, j, b)
    right = spin_harmonic_block(l, s, j, a)
    return np.tensordot(left, np.conj(right), axes=([0], [0]))


def hermiticity_residual(lp: int, sp: HalfLike, l: int, s: HalfLike, j: HalfLike,
                         a: Direction, b: Direction) -> float:
    """max|S(l' s', l s; a, b) - conj(S(l s, l' s'; b, a))^T| for the seed sum S.

    The transpose moves the indices of the (l, s) harmonic behind those of
    the (l', s') harmonic, so both sides share one layout.
    """
    left = seed_sum(lp, sp, l, s, j, a, b)
    right = seed_sum(l, s, lp, sp, j, b, a)
    n_first = len(right.shape) - len(spin_harmonic_block(lp, sp, j, b).shape[1:])
    axes = tuple(range(n_first, right.ndim)) + tuple(range(n_first))
    return float(np.max(np.abs(left - np.conj(right).transpose(axes))))
