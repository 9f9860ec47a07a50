"""Legendre polynomials, their derivatives, and scalar spherical harmonics.

Spherical harmonics use the Condon-Shortley phase and orthonormal
normalization on the unit sphere:

    Y_lm(theta, phi) = (-1)^m sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(cos theta) e^{i m phi}

with P_l^m the associated Legendre function without the phase factor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "Direction",
    "legendre_p",
    "legendre_p_deriv",
    "legendre_derivs",
    "spherical_harmonic",
    "spherical_harmonics_row",
    "dot_and_wedge",
    "random_directions",
]

_CLAMP = 1e-12


@dataclass(frozen=True)
class Direction:
    """A point on the unit sphere given by polar angle theta and azimuth phi."""

    theta: float
    phi: float
    vector: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        theta = float(self.theta)
        phi = float(self.phi) % (2 * math.pi)
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        st = math.sin(theta)
        vec = np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    @classmethod
    def from_vector(cls, vec) -> "Direction":
        v = np.asarray(vec, dtype=float)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise ValueError("zero vector has no direction")
        v = v / norm
        theta = math.acos(min(1.0, max(-1.0, v[2])))
        phi = math.atan2(v[1], v[0])
        return cls(theta, phi)

    def antipode(self) -> "Direction":
        return Direction(math.pi - self.theta, self.phi + math.pi)

    def __iter__(self):
        return iter(self.vector)


def _clamp(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 + _CLAMP):
        raise ValueError("argument of a Legendre polynomial must lie in [-1, 1]")
    return np.clip(x, -1.0, 1.0)


def legendre_derivs(lmax: int, kmax: int, x):
    """Table ``D[k, l] = d^k P_l / dx^k (x)`` for 0 <= l <= lmax, 0 <= k <= kmax.

    Uses Bonnet's recurrence for k = 0 and, for k >= 1,
    P^{(k)}_{l+1} = P^{(k)}_{l-1} + (2l + 1) P^{(k-1)}_l.
    """
    x = _clamp(x)
    shape = (kmax + 1, lmax + 1) + x.shape
    out = np.zeros(shape)
    out[0, 0] = 1.0
    if lmax >= 1:
        out[0, 1] = x
    for l in range(1, lmax):
        out[0, l + 1] = ((2 * l + 1) * x * out[0, l] - l * out[0, l - 1]) / (l + 1)
    for k in range(1, kmax + 1):
        for l in range(0, lmax):
            prev = out[k, l - 1] if l >= 1 else 0.0
            out[k, l + 1] = prev + (2 * l + 1) * out[k - 1, l]
    return out


def legendre_p(l: int, x):
    """Legendre polynomial P_l(x), |x| <= 1."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    res = legendre_derivs(l, 0, x)[0, l]
    return float(res) if np.ndim(res) == 0 else res


def legendre_p_deriv(l: int, k: int, x):
    """k-th derivative of P_l at x; zero when k > l."""
    if l < 0 or k < 0:
        raise ValueError("degree and order must be nonnegative")
    if k > l:
        x = _clamp(x)
        return 0.0 if np.ndim(x) == 0 else np.zeros_like(x)
    res = legendre_derivs(l, k, x)[k, l]
    return float(res) if np.ndim(res) == 0 else res


def _assoc_normalized(l: int, ct: float, st: float) -> np.ndarray:
    """sqrt((2l+1)/4pi (l-m)!/(l+m)!) P_l^m(cos) for m = 0..l, without CS phase."""
    # sectoral start: Pbar_m^m = sqrt((2m+1)/(4pi (2m)!)) (2m-1)!! st^m
    pm = np.empty(l + 1)
    val = math.sqrt(1.0 / (4 * math.pi))
    for m in range(0, l + 1):
        if m > 0:
            val *= st * math.sqrt((2 * m + 1) / (2 * m))
        if m == l:
            pm[m] = val
            continue
        # raise the degree from m to l at fixed order
        p_prev, p_cur = 0.0, val
        for n in range(m + 1, l + 1):
            a = math.sqrt((4 * n * n - 1) / (n * n - m * m))
            b = math.sqrt(((n - 1) ** 2 - m * m) / (4 * (n - 1) ** 2 - 1))
            p_prev, p_cur = p_cur, a * (ct * p_cur - b * p_prev)
        pm[m] = p_cur
    return pm


@lru_cache(maxsize=4096)
def _row(l: int, theta: float, phi: float) -> np.ndarray:
    pm = _assoc_normalized(l, math.cos(theta), math.sin(theta))
    m = np.arange(l + 1)
    pos = ((-1.0) ** m) * pm * np.exp(1j * m * phi)
    row = np.empty(2 * l + 1, dtype=complex)
    row[l:] = pos
    row[:l] = (((-1.0) ** m[1:]) * np.conj(pos[1:]))[::-1]
    row.setflags(write=False)
    return row


def spherical_harmonics_row(l: int, d: Direction) -> np.ndarray:
    """All Y_lm(d) for m = -l..l, as a read-only complex array indexed by m + l."""
    return _row(int(l), d.theta, d.phi)


def spherical_harmonic(l: int, m: int, d: Direction) -> complex:
    """Y_lm(d); zero when |m| > l."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    if abs(m) > l:
        return 0j
    return complex(spherical_harmonics_row(l, d)[m + l])


def dot_and_wedge(a: Direction, b: Direction) -> tuple[float, np.ndarray]:
    """x = a.b and v = a x b (right-handed cross product)."""
    av, bv = a.vector, b.vector
    x = float(np.clip(av @ bv, -1.0, 1.0))
    return x, np.cross(av, bv)


def random_directions(rng: np.random.Generator, count: int) -> list[Direction]:
    """Directions uniformly distributed on the sphere."""
    ct = rng.uniform(-1.0, 1.0, size=count)
    phi = rng.uniform(0.0, 2 * math.pi, size=count)
    return [Direction(math.acos(c), p) for c, p in zip(ct, phi)]
