"""Small dense complex tensors over C^3 with an optional C^2 spinor index.

Index layout convention: all 3-dimensional (Cartesian) indices first, then
spinor indices.  Objects with two index groups, such as projectors or
products ``Y'(b) (x) conj(Y(a))``, store the first group (its Cartesian
indices, then its spinor index) followed by the second group.

Bracket conventions on lists of vectors:

* ``{a b c}``   -- sum over all permutations of the outer product, no 1/n!
* ``{a b c}_0`` -- the traceless part of ``{a b c}``, i.e. the rank-n
  projector applied to it
* ``[a b]``     -- ``a b - b a``
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .angular import HalfLike, cg, half

__all__ = [
    "SpinorTensor",
    "PAULI",
    "LEVI_CIVITA",
    "spherical_basis",
    "standard_tensor",
    "standard_spinor",
    "projector_tensor",
    "projector_spinor",
    "sym_braces",
    "sym_braces_traceless",
    "antisym_brackets",
    "apply_projector",
]

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULI.setflags(write=False)

LEVI_CIVITA = np.zeros((3, 3, 3))
for _p in itertools.permutations(range(3)):
    LEVI_CIVITA[_p] = np.linalg.det(np.eye(3)[list(_p)])
LEVI_CIVITA.setflags(write=False)


@dataclass(frozen=True, eq=False)
class SpinorTensor:
    """Dense tensor with ``rank`` Cartesian indices and ``spinors`` 2-dim indices."""

    data: np.ndarray
    rank: int
    spinors: int = 0

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=complex)
        expected = (3,) * self.rank + (2,) * self.spinors
        if arr.shape != expected:
            raise ValueError(f"shape {arr.shape} does not match rank {self.rank}, spinors {self.spinors}")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def like(cls, arr, rank: int, spinors: int = 0) -> "SpinorTensor":
        return cls(np.asarray(arr), rank, spinors)

    @property
    def has_spinor(self) -> bool:
        return self.spinors > 0

    @property
    def size(self) -> int:
        return self.data.size

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def conj(self) -> "SpinorTensor":
        return SpinorTensor(self.data.conj(), self.rank, self.spinors)

    def permute(self, axes: Sequence[int]) -> "SpinorTensor":
        if sorted(axes) != list(range(self.rank)):
            raise ValueError("permutation must act on the Cartesian indices only")
        full = list(axes) + list(range(self.rank, self.rank + self.spinors))
        return SpinorTensor(self.data.transpose(full), self.rank, self.spinors)

    def trace(self, i: int, j: int) -> "SpinorTensor":
        """Contract Cartesian indices i and j with the Kronecker delta."""
        return SpinorTensor(np.trace(self.data, axis1=i, axis2=j), self.rank - 2, self.spinors)

    def pauli_contract(self, k: int) -> "SpinorTensor":
        """sigma^{i_k}_{AB} T^{..i_k..}_B for a tensor with one spinor index."""
        if self.spinors != 1:
            raise ValueError("needs exactly one spinor index")
        moved = np.moveaxis(self.data, k, -2)  # (..., i_k, B)
        out = np.einsum("iab,...ib->...a", PAULI, moved)
        return SpinorTensor(out, self.rank - 1, 1)

    def inner(self, other: "SpinorTensor") -> complex:
        """Full contraction conj(self) . other."""
        return complex(np.vdot(self.data, np.asarray(other)))

    def norm_max(self) -> float:
        return float(np.max(np.abs(self.data))) if self.data.size else 0.0

    def _coerce(self, other):
        if isinstance(other, SpinorTensor):
            if (other.rank, other.spinors) != (self.rank, self.spinors):
                raise ValueError("tensor signatures differ")
            return other.data
        return other

    def __add__(self, other):
        return SpinorTensor(self.data + self._coerce(other), self.rank, self.spinors)

    def __sub__(self, other):
        return SpinorTensor(self.data - self._coerce(other), self.rank, self.spinors)

    def __mul__(self, scalar):
        return SpinorTensor(self.data * complex(scalar), self.rank, self.spinors)

    __rmul__ = __mul__

    def __neg__(self):
        return SpinorTensor(-self.data, self.rank, self.spinors)

    def __repr__(self) -> str:
        return f"SpinorTensor(rank={self.rank}, spinors={self.spinors})"


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def _basis_array(m: int) -> np.ndarray:
    if m == 0:
        return _frozen(np.array([0, 0, 1], dtype=complex))
    if m in (1, -1):
        return _frozen(-m * np.array([1, m * 1j, 0], dtype=complex) / math.sqrt(2))
    raise ValueError(f"spherical basis index must be -1, 0 or 1, got {m}")


def spherical_basis(m: int) -> SpinorTensor:
    """eps(0) = z, eps(+-1) = -+(x +- i y)/sqrt(2)."""
    return SpinorTensor(_basis_array(m), 1)


@lru_cache(maxsize=None)
def _standard_tensor_array(n: int, m: int) -> np.ndarray:
    if n == 0:
        return _frozen(np.array(1.0 + 0j))
    if n == 1:
        return _basis_array(m)
    out = np.zeros((3,) * n, dtype=complex)
    for m1 in range(-(n - 1), n):
        m2 = m - m1
        if abs(m2) > 1:
            continue
        c = cg(n - 1, m1, 1, m2, n, m)
        if c:
            out += c * np.multiply.outer(_standard_tensor_array(n - 1, m1), _basis_array(m2))
    return _frozen(out)


def standard_tensor(n: int, m: int) -> SpinorTensor:
    """Standard rank-n irreducible tensor eps^{i1..in}(m).

    Built by coupling eps^{(n-1)}(m1) with eps(m2) to total spin n.  The
    result is totally symmetric, traceless and orthonormal in m.
    """
    if n < 0 or abs(m) > n:
        raise ValueError(f"need |m| <= n, got n={n}, m={m}")
    return SpinorTensor(_standard_tensor_array(n, m), n)


_CHI = {1: np.array([1, 0], dtype=complex), -1: np.array([0, 1], dtype=complex)}


@lru_cache(maxsize=None)
def _standard_spinor_array(n: int, twice_sz: int) -> np.ndarray:
    out = np.zeros((3,) * n + (2,), dtype=complex)
    for t_sigma in (1, -1):
        m2 = twice_sz - t_sigma
        if m2 % 2:
            raise ValueError("spinor projection must be a half-integer")
        m = m2 // 2
        if abs(m) > n:
            continue
        c = cg(n, m, "1/2", f"{t_sigma}/2", f"{2 * n + 1}/2", f"{twice_sz}/2")
        if c:
            out += c * np.multiply.outer(_standard_tensor_array(n, m), _CHI[t_sigma])
    return _frozen(out)


def standard_spinor(n: int, s_z: HalfLike) -> SpinorTensor:
    """Standard spin-(n+1/2) spinor chi_A^{i1..in}(s_z)."""
    tsz = half(s_z).twice
    if n < 0 or tsz % 2 == 0 or abs(tsz) > 2 * n + 1:
        raise ValueError(f"need half-integer |s_z| <= n + 1/2, got n={n}, s_z={s_z}")
    return SpinorTensor(_standard_spinor_array(n, tsz), n, 1)


@lru_cache(maxsize=None)
def _projector_tensor_array(n: int) -> np.ndarray:
    out = sum(
        np.multiply.outer(_standard_tensor_array(n, m), _standard_tensor_array(n, m).conj())
        for m in range(-n, n + 1)
    )
    return _frozen(np.asarray(out, dtype=complex))


def projector_tensor(n: int) -> SpinorTensor:
    """Orthogonal projector X^{i1..in; j1..jn} onto symmetric traceless rank-n tensors."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return SpinorTensor(_projector_tensor_array(n), 2 * n)


@lru_cache(maxsize=None)
def _projector_spinor_array(n: int) -> np.ndarray:
    parts = []
    for tsz in range(-(2 * n + 1), 2 * n + 2, 2):
        chi = _standard_spinor_array(n, tsz)
        parts.append(np.multiply.outer(chi, chi.conj()))
    return _frozen(np.asarray(sum(parts), dtype=complex))


def projector_spinor(n: int) -> np.ndarray:
    """Projector X^{i..;j..}_{AB} onto the spin-(n+1/2) subspace.

    Layout ``(i1..in, A, j1..jn, B)``; returned as a plain array because
    the two spinor indices sit in separate index groups.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return _projector_spinor_array(n)


def apply_projector(n: int, t) -> np.ndarray:
    """X^{i;j} t^{j} for a rank-n array t (extra trailing axes are carried along)."""
    t = np.asarray(t)
    if n == 0:
        return t.astype(complex)
    x = _projector_tensor_array(n).reshape(3**n, 3**n)
    tail = t.shape[n:]
    return (x @ t.reshape(3**n, -1)).reshape((3,) * n + tail)


def _outer(factors) -> np.ndarray:
    out = np.array(1.0 + 0j)
    for f in factors:
        out = np.multiply.outer(out, np.asarray(f))
    return out


def _sym_array(factors) -> np.ndarray:
    vecs = [np.asarray(f, dtype=complex) for f in factors]
    n = len(vecs)
    if n == 0:
        return np.array(1.0 + 0j)
    total = np.zeros((3,) * n, dtype=complex)
    for perm in itertools.permutations(range(n)):
        total += _outer([vecs[p] for p in perm])
    return total


def sym_braces(factors) -> SpinorTensor:
    """{a1 ... an}: sum of outer products over all n! orderings."""
    factors = list(factors)
    return SpinorTensor(_sym_array(factors), len(factors))


def sym_braces_traceless(factors) -> SpinorTensor:
    """{a1 ... an}_0: traceless part of :func:`sym_braces`."""
    factors = list(factors)
    n = len(factors)
    return SpinorTensor(apply_projector(n, _sym_array(factors)), n)


def antisym_brackets(a, b) -> SpinorTensor:
    """[a b] = a b - b a."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return SpinorTensor(np.multiply.outer(a, b) - np.multiply.outer(b, a), 2)
