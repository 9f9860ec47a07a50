"""Exact half-integer quantum numbers and Clebsch-Gordan coefficients.

Coefficients follow the Condon-Shortley phase convention and are computed
with Racah's single-sum formula in exact rational arithmetic.  The float
value is only produced at the very end, as ``sign * sqrt(square)``.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

__all__ = ["HalfInt", "CGExact", "half", "cg_exact", "cg", "cg_cache_info"]

HalfLike = Union["HalfInt", int, Fraction, float, str]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A multiple of 1/2, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value: HalfLike) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a quantum number")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, float):
            if not math.isfinite(value) or (2 * value) != round(2 * value):
                raise ValueError(f"{value!r} is not a half-integer")
            return cls(int(round(2 * value)))
        frac = Fraction(value)
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __float__(self) -> float:
        return self.twice / 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: HalfLike) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: HalfLike) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: HalfLike) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __eq__(self, other: object) -> bool:
        try:
            return self.twice == HalfInt.of(other).twice  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other: HalfLike) -> bool:
        return self.twice < HalfInt.of(other).twice

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def half(value: HalfLike) -> HalfInt:
    """Coerce ``value`` (int, Fraction, float, '3/2', HalfInt) to HalfInt."""
    return HalfInt.of(value)


@dataclass(frozen=True)
class CGExact:
    """A Clebsch-Gordan coefficient as ``sign * sqrt(square)``."""

    sign: int
    square: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.square < 0:
            raise ValueError("square must be nonnegative")
        if (self.sign == 0) != (self.square == 0):
            raise ValueError("square is zero iff sign is zero")

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.sqrt(float(self.square))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "CGExact") -> "CGExact":
        if not isinstance(other, CGExact):
            return NotImplemented
        return CGExact(self.sign * other.sign, self.square * other.square)


ZERO = CGExact(0, Fraction(0))


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = k^2 * f with f squarefree; returns (k, f)."""
    k, f, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            f *= p
        p += 1
    return k, f * n


class SurdSum:
    """Exact sum of numbers sign * sqrt(rational), kept as {squarefree radicand: rational}.

    Square roots of distinct squarefree integers are linearly independent over
    the rationals, so two sums are equal iff their coefficient maps agree.
    """

    def __init__(self) -> None:
        self.terms: dict[int, Fraction] = {}

    def add(self, value: CGExact) -> "SurdSum":
        if value.sign == 0:
            return self
        num, den = value.square.numerator, value.square.denominator
        k, f = _squarefree_split(num * den)
        coeff = Fraction(value.sign * k, den)
        total = self.terms.get(f, Fraction(0)) + coeff
        if total:
            self.terms[f] = total
        else:
            self.terms.pop(f, None)
        return self

    def equals_rational(self, value) -> bool:
        value = Fraction(value)
        if value == 0:
            return not self.terms
        return set(self.terms) == {1} and self.terms[1] == value

    def __float__(self) -> float:
        return sum(float(c) * math.sqrt(f) for f, c in self.terms.items())


def _check_pair(j: HalfInt, m: HalfInt, name: str) -> None:
    if j.twice < 0:
        raise ValueError(f"{name}: angular momentum must be nonnegative, got {j}")
    if (j.twice - m.twice) % 2:
        raise ValueError(f"{name}: projection {m} not reachable from {j} by integer steps")


_cache: dict[tuple[int, ...], CGExact] = {}
_cache_lock = threading.Lock()
_CACHE_MAX = 200_000
_stats = {"hits": 0, "misses": 0}


def cg_cache_info() -> dict[str, int]:
    with _cache_lock:
        return {"size": len(_cache), "max": _CACHE_MAX, **_stats}


def _racah(tj1: int, tm1: int, tj2: int, tm2: int, tj: int, tm: int) -> CGExact:
    # all arguments doubled; caller has checked selection rules
    a = (tj1 + tj2 - tj) // 2
    b = (tj1 - tj2 + tj) // 2
    c = (-tj1 + tj2 + tj) // 2
    f = math.factorial
    pref = Fraction(
        (tj + 1) * f(a) * f(b) * f(c)
        * f((tj1 + tm1) // 2) * f((tj1 - tm1) // 2)
        * f((tj2 + tm2) // 2) * f((tj2 - tm2) // 2)
        * f((tj + tm) // 2) * f((tj - tm) // 2),
        f((tj1 + tj2 + tj) // 2 + 1),
    )
    kmin = max(0, (tj2 - tj - tm1) // 2, (tj1 - tj + tm2) // 2)
    kmax = min(a, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            f(k) * f(a - k) * f((tj1 - tm1) // 2 - k) * f((tj2 + tm2) // 2 - k)
            * f((tj - tj2 + tm1) // 2 + k) * f((tj - tj1 - tm2) // 2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    if total == 0:
        return ZERO
    return CGExact(1 if total > 0 else -1, pref * total * total)


def cg_exact(j1: HalfLike, m1: HalfLike, j2: HalfLike, m2: HalfLike,
             j: HalfLike, m: HalfLike) -> CGExact:
    """Exact <j1 m1; j2 m2 | j m>.

    Returns the zero coefficient when m1 + m2 != m, when the triangle rule
    fails or when some |m_i| > j_i.  Raises ValueError when a projection is
    not an integer step away from its angular momentum.
    """
    args = [half(v) for v in (j1, m1, j2, m2, j, m)]
    hj1, hm1, hj2, hm2, hj, hm = args
    _check_pair(hj1, hm1, "j1/m1")
    _check_pair(hj2, hm2, "j2/m2")
    _check_pair(hj, hm, "j/m")
    key = tuple(v.twice for v in args)
    with _cache_lock:
        hit = _cache.get(key)
        if hit is not None:
            _stats["hits"] += 1
            return hit
    tj1, tm1, tj2, tm2, tj, tm = key
    if (tm1 + tm2 != tm or abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm) > tj
            or tj > tj1 + tj2 or tj < abs(tj1 - tj2)
            or (tj1 + tj2 + tj) % 2):
        value = ZERO
    else:
        value = _racah(*key)
    with _cache_lock:
        _stats["misses"] += 1
        if len(_cache) >= _CACHE_MAX:
            _cache.clear()
        _cache[key] = value
    return value


@lru_cache(maxsize=65536)
def cg(j1: HalfLike, m1: HalfLike, j2: HalfLike, m2: HalfLike,
       j: HalfLike, m: HalfLike) -> float:
    """Float view of :func:`cg_exact`."""
    return float(cg_exact(j1, m1, j2, m2, j, m))
