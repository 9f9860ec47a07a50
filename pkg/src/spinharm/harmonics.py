"""Spin-s spherical harmonics for integer and half-integer s.

    Y^{l s}_{j jz}(r) = sum_{lz, sz} <l lz; s sz | j jz> Y_{l lz}(r) basis(sz)

where ``basis`` is the standard tensor eps^{(s)}(sz) for integer s and the
standard spinor chi^{(s)}(sz) for half-integer s.  For s = 0 the harmonic is
the scalar Y_{l jz}.  Labels that violate the triangle rule give the zero
tensor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .angular import HalfInt, HalfLike, cg, half
from .poly import Direction, spherical_harmonics_row
from .tensor import SpinorTensor, _standard_spinor_array, _standard_tensor_array

__all__ = [
    "SpinHarmonicLabel",
    "spin_harmonic",
    "spin_harmonic_block",
    "basis_shape",
    "quadrature_grid",
    "quadrature_inner_product",
]


@dataclass(frozen=True)
class SpinHarmonicLabel:
    l: int
    s: HalfInt
    j: HalfInt
    j_z: HalfInt

    def __init__(self, l: int, s: HalfLike, j: HalfLike, j_z: HalfLike) -> None:
        object.__setattr__(self, "l", int(l))
        object.__setattr__(self, "s", half(s))
        object.__setattr__(self, "j", half(j))
        object.__setattr__(self, "j_z", half(j_z))
        if self.l < 0 or self.s.twice < 0:
            raise ValueError("l and s must be nonnegative")
        if (self.j - self.j_z).twice % 2:
            raise ValueError("j - j_z must be an integer")

    @property
    def is_allowed(self) -> bool:
        """Triangle rule for (l, s, j) and |j_z| <= j."""
        l2, s2, j2 = 2 * self.l, self.s.twice, self.j.twice
        return (abs(l2 - s2) <= j2 <= l2 + s2 and (l2 + s2 + j2) % 2 == 0
                and abs(self.j_z.twice) <= j2)


def basis_shape(s: HalfLike) -> tuple[int, ...]:
    s = half(s)
    n = s.twice // 2
    return (3,) * n + (() if s.is_integer else (2,))


@lru_cache(maxsize=None)
def _spin_basis(ts: int) -> np.ndarray:
    """Stack of spin basis objects indexed by sz + s."""
    n = ts // 2
    if ts % 2 == 0:
        stack = [_standard_tensor_array(n, m) for m in range(-n, n + 1)]
    else:
        stack = [_standard_spinor_array(n, t) for t in range(-ts, ts + 1, 2)]
    arr = np.array(stack)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=4096)
def _cg_block(l: int, ts: int, tj: int) -> np.ndarray:
    """M[jz, lz, sz] = <l lz; s sz | j jz>, with jz, lz, sz offset to start at 0."""
    out = np.zeros((tj + 1, 2 * l + 1, ts + 1))
    for a, tjz in enumerate(range(-tj, tj + 1, 2)):
        for b, lz in enumerate(range(-l, l + 1)):
            tsz = tjz - 2 * lz
            if abs(tsz) <= ts:
                out[a, b, (tsz + ts) // 2] = cg(l, lz, f"{ts}/2", f"{tsz}/2", f"{tj}/2", f"{tjz}/2")
    out.setflags(write=False)
    return out


def _allowed(l: int, ts: int, tj: int) -> bool:
    return abs(2 * l - ts) <= tj <= 2 * l + ts and (2 * l + ts + tj) % 2 == 0


def spin_harmonic_block(l: int, s: HalfLike, j: HalfLike, d: Direction) -> np.ndarray:
    """Y^{l s}_{j jz}(d) for every jz = -j..j, stacked along axis 0.

    Shape ``(2j+1,) + basis_shape(s)``; zero when (l, s, j) is not a triangle.
    """
    ts, tj = half(s).twice, half(j).twice
    if tj < 0 or (tj - ts) % 2:
        raise ValueError(f"j={j} incompatible with s={s}")
    shape = (tj + 1,) + basis_shape(s)
    if l < 0 or not _allowed(l, ts, tj):
        return np.zeros(shape, dtype=complex)
    row = spherical_harmonics_row(l, d)
    coeff = np.einsum("kab,a->kb", _cg_block(l, ts, tj), row)
    basis = _spin_basis(ts)
    return np.tensordot(coeff, basis, axes=([1], [0]))


def spin_harmonic(label: SpinHarmonicLabel, d: Direction) -> SpinorTensor:
    """Y^{l s}_{j jz}(d) as a SpinorTensor (rank floor(s), spinor iff s half-integer)."""
    s = label.s
    rank, spinors = s.twice // 2, (0 if s.is_integer else 1)
    if not label.is_allowed:
        return SpinorTensor(np.zeros(basis_shape(s), dtype=complex), rank, spinors)
    block = spin_harmonic_block(label.l, s, label.j, d)
    return SpinorTensor(block[(label.j_z.twice + label.j.twice) // 2], rank, spinors)


@lru_cache(maxsize=64)
def quadrature_grid(l_max: int):
    """Nodes and weights exact for integrands of band limit <= 2*l_max.

    Gauss-Legendre in cos(theta) with l_max + 2 nodes, uniform trapezoid in
    phi with 2*l_max + 3 nodes.  Returns (directions, weights).
    """
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    x, w = np.polynomial.legendre.leggauss(l_max + 2)
    nphi = 2 * l_max + 3
    phis = 2 * math.pi * np.arange(nphi) / nphi
    dirs, weights = [], []
    for xi, wi in zip(x, w):
        theta = math.acos(xi)
        for ph in phis:
            dirs.append(Direction(theta, ph))
            weights.append(wi * 2 * math.pi / nphi)
    return tuple(dirs), np.array(weights)


def quadrature_inner_product(f: Callable[[Direction], object], g: Callable[[Direction], object],
                             l_max: int) -> complex:
    """Integral over the sphere of conj(f) . g, fully contracted."""
    dirs, weights = quadrature_grid(l_max)
    total = 0j
    for d, w in zip(dirs, weights):
        fv = np.asarray(f(d), dtype=complex)
        gv = np.asarray(g(d), dtype=complex)
        total += w * np.vdot(fv, gv)
    return total
