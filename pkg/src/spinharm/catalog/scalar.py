"""Bilocal sums of two scalar spherical harmonics."""
from __future__ import annotations

import math

import numpy as np

from ..angular import cg
from ..poly import spherical_harmonic
from .geometry import FOUR_PI
from .registry import TheoremSpec, register
from .sums import scalar_sum

SIGNS = (1, -1)


def _ff(n: int, k: int) -> float:
    """n! / (n-k)!, zero when n < k (the matching harmonic vanishes)."""
    if n < k or n < 0:
        return 0.0
    return float(math.prod(range(n - k + 1, n + 1)))


def _sqrt(x: float) -> float:
    if x < -1e-12:
        raise ValueError(f"negative weight {x}")
    return math.sqrt(max(x, 0.0))


# -- classic addition theorem and l_z moments ---------------------------------

register(TheoremSpec(
    id="scalar.classic",
    family="scalar-bilocal",
    citation="eq:mix1 (n=t=0)",
    domain="l >= 0",
    lhs=lambda p, a, b: scalar_sum(p["l"], p["l"], 0, None, a, b),
    rhs=lambda p, g: (2 * p["l"] + 1) / FOUR_PI * g.P(p["l"]),
    valid=lambda L: ({"l": l} for l in range(L + 1)),
))


def _moment_lhs(k):
    return lambda p, a, b: scalar_sum(p["l"], p["l"], 0, lambda lz: float(lz) ** k, a, b)


def _mom1(p, g):
    l = p["l"]
    return 1j * (2 * l + 1) / FOUR_PI * g.v[2] * g.P(l, 1)


def _mom2(p, g):
    l, v3 = p["l"], g.v[2]
    return -(2 * l + 1) / FOUR_PI * (v3**2 * g.P(l, 2) + (g.a[2] * g.b[2] - g.x) * g.P(l, 1))


def _mom3(p, g):
    l, v3 = p["l"], g.v[2]
    return -1j * (2 * l + 1) / FOUR_PI * v3 * (
        v3**2 * g.P(l, 3) + 3 * (g.a[2] * g.b[2] - g.x) * g.P(l, 2) - g.P(l, 1))


def _mom4(p, g):
    l = p["l"]
    a, b, v, s0 = g.a, g.b, g.v, g.s0
    ll = l * (l + 1)
    z4 = (2, 2, 2, 2)
    inner = (
        s0(v, v, v, v)[z4] * g.P(l, 4)
        + 6 * s0(a, b, v, v)[z4] * g.P(l, 3)
        + 3 * s0(a, a, b, b)[z4] * g.P(l, 2)
        - 12 / 7 * (6 * ll - 5) * (s0(v, v)[2, 2] * g.P(l, 2) + s0(a, b)[2, 2] * g.P(l, 1))
        + 8 / 5 * ll * (3 * ll - 1) * g.P(l)
    )
    return (2 * l + 1) / FOUR_PI / 24 * inner


def _mom5(p, g):
    l = p["l"]
    a, b, v, s0 = g.a, g.b, g.v, g.s0
    ll = l * (l + 1)
    z5 = (2,) * 5
    inner = (
        s0(v, v, v, v, v)[z5] * g.P(l, 5)
        + 10 * s0(a, b, v, v, v)[z5] * g.P(l, 4)
        + 15 * s0(a, a, b, b, v)[z5] * g.P(l, 3)
        - 100 / 9 * (2 * ll - 3) * (s0(v, v, v)[2, 2, 2] * g.P(l, 3) + 3 * s0(a, b, v)[2, 2, 2] * g.P(l, 2))
        + 120 / 7 * (3 * ll**2 - 3 * ll + 1) * v[2] * g.P(l, 1)
    )
    return 1j * (2 * l + 1) / FOUR_PI / 120 * inner


for _k, _rhs, _tag in ((1, _mom1, "a"), (2, _mom2, "b"), (3, _mom3, "c"), (4, _mom4, "d"), (5, _mom5, "e")):
    register(TheoremSpec(
        id=f"moments.t{_k}",
        family="scalar-bilocal",
        citation=f"eq:momres{_tag}",
        domain="l >= 0",
        lhs=_moment_lhs(_k),
        rhs=_rhs,
        valid=lambda L: ({"l": l} for l in range(L + 1)),
        notes=("P^(2) in the third term read as P^(3)" if _k == 5 else ""),
    ))


# -- ladder sums, coefficients C_{t,q} extracted --------------------------------

def _ladder_weight(l, t, sgn):
    def w(lz):
        return _sqrt(_ff(l - sgn * lz, t) * _ff(l + sgn * lz + t, t))
    return w


def _ladder_structures(p, g):
    l, t, sgn = p["l"], p["t"], p["sign"]
    ap, bp, vp = g.pm(g.a, sgn), g.pm(g.b, sgn), g.pm(g.v, sgn)
    pref = (1j**t) * (2 * l + 1) / FOUR_PI
    return [
        (f"C[{t},{q}]", pref * ap**q * bp**q * vp ** (t - 2 * q) * g.P(l, t - q))
        for q in range(t // 2 + 1)
    ]


register(TheoremSpec(
    id="ladder.t",
    family="scalar-bilocal",
    citation="eq:addthr2",
    domain="l >= 0, 1 <= t <= 4, sign = +-1 (all upper or all lower signs)",
    lhs=lambda p, a, b: scalar_sum(p["l"], p["l"], p["sign"] * p["t"], _ladder_weight(p["l"], p["t"], p["sign"]), a, b),
    structures=_ladder_structures,
    valid=lambda L: ({"l": l, "t": t, "sign": s} for l in range(L + 1) for t in range(1, 5) for s in SIGNS),
))


# -- shifted-l sums (n = 1, t = 0) ----------------------------------------------

def _shift_params(L, lmin=0):
    for l in range(lmin, L + 1):
        for dl in SIGNS:
            if l + dl >= 0:
                yield {"l": l, "dl": dl}


def _shift_m_params(L, lmin=0):
    for p in _shift_params(L, lmin):
        for m in SIGNS:
            yield {**p, "m": m}


def _mean(p):
    return p["l"] + p["dl"] / 2


def _rmat6a_w(p):
    lm = _mean(p)
    return lambda lz: _sqrt((lm + 0.5) ** 2 - lz**2)


def _rmat6a(p, g):
    l, dl = p["l"], p["dl"]
    l1 = l + dl
    return dl / FOUR_PI * math.sqrt((2 * l + 1) * (2 * l1 + 1)) * (g.b[2] * g.P(l1, 1) - g.a[2] * g.P(l, 1))


register(TheoremSpec(
    id="shift.n1.m0",
    family="scalar-bilocal",
    citation="eq:rmat6a",
    domain="l >= 0, l1 = l + dl, dl = +-1; <l> = (l + l1)/2",
    lhs=lambda p, a, b: scalar_sum(p["l"] + p["dl"], p["l"], 0, _rmat6a_w(p), a, b),
    rhs=_rmat6a,
    valid=_shift_params,
))


def _rmat6b_w(p):
    l1, dl, m = p["l"] + p["dl"], p["dl"], p["m"]
    return lambda lz: _sqrt((l1 + dl * m * lz) * (l1 + dl * m * lz + 1))


def _rmat6b(p, g):
    l, dl, m = p["l"], p["dl"], p["m"]
    l1 = l + dl
    return -m / FOUR_PI * math.sqrt((2 * l + 1) * (2 * l1 + 1)) * (
        g.pm(g.b, m) * g.P(l1, 1) - g.pm(g.a, m) * g.P(l, 1))


register(TheoremSpec(
    id="shift.n1.m1",
    family="scalar-bilocal",
    citation="eq:rmat6b",
    domain="l >= 0, l1 = l + dl, dl = +-1, m = +-1",
    lhs=lambda p, a, b: scalar_sum(p["l"] + p["dl"], p["l"], p["m"], _rmat6b_w(p), a, b),
    rhs=_rmat6b,
    valid=_shift_m_params,
))


# -- l+1 <- l-1 sums (n = 2, t = 0) -----------------------------------------------

def _rmat7_params(L):
    return ({"l": l} for l in range(1, L + 1))


def _rmat7_m_params(L):
    return ({"l": l, "m": m} for l in range(1, L + 1) for m in SIGNS)


def _rmat7a(p, g):
    l = p["l"]
    a3, b3 = g.a[2], g.b[2]
    return 1 / FOUR_PI * math.sqrt((2 * l - 1) * (2 * l + 3)) * (
        b3**2 * g.P(l + 1, 2) - 2 * a3 * b3 * g.P(l, 2) + a3**2 * g.P(l - 1, 2) - g.P(l, 1))


def _rmat7b(p, g):
    l, m = p["l"], p["m"]
    a3, b3, am, bm = g.a[2], g.b[2], g.pm(g.a, m), g.pm(g.b, m)
    return -m / FOUR_PI * math.sqrt((2 * l - 1) * (2 * l + 3)) * (
        bm * b3 * g.P(l + 1, 2) - (bm * a3 + b3 * am) * g.P(l, 2) + am * a3 * g.P(l - 1, 2))


def _rmat7c(p, g):
    l, m = p["l"], p["m"]
    am, bm = g.pm(g.a, m), g.pm(g.b, m)
    return 1 / FOUR_PI * math.sqrt((2 * l - 1) * (2 * l + 3)) * (
        bm**2 * g.P(l + 1, 2) - 2 * bm * am * g.P(l, 2) + am**2 * g.P(l - 1, 2))


def _w7a(l):
    return lambda lz: _sqrt((l * l - lz * lz) * ((l + 1) ** 2 - lz * lz))


def _w7b(l, m):
    return lambda lz: _sqrt((l * l - lz * lz) * (l + m * lz + 1) * (l + m * lz + 2))


def _w7c(l, m):
    return lambda lz: _sqrt(_ff(l + m * lz + 3, 4))


register(TheoremSpec(
    id="shift.n2.m0",
    family="scalar-bilocal",
    citation="eq:rmat7a",
    domain="l >= 1; sums Y_{l+1}(b) Y_{l-1}(a)*",
    lhs=lambda p, a, b: scalar_sum(p["l"] + 1, p["l"] - 1, 0, _w7a(p["l"]), a, b),
    rhs=_rmat7a,
    valid=_rmat7_params,
))
register(TheoremSpec(
    id="shift.n2.m1",
    family="scalar-bilocal",
    citation="eq:rmat7b",
    domain="l >= 1, m = +-1",
    lhs=lambda p, a, b: scalar_sum(p["l"] + 1, p["l"] - 1, p["m"], _w7b(p["l"], p["m"]), a, b),
    rhs=_rmat7b,
    valid=_rmat7_m_params,
))
register(TheoremSpec(
    id="shift.n2.m2",
    family="scalar-bilocal",
    citation="eq:rmat7c",
    domain="l >= 1, m = +-1, shift 2m",
    lhs=lambda p, a, b: scalar_sum(p["l"] + 1, p["l"] - 1, 2 * p["m"], _w7c(p["l"], p["m"]), a, b),
    rhs=_rmat7c,
    valid=_rmat7_m_params,
))


# -- l_z-weighted shifted sums ---------------------------------------------------

def _mix3a(p, g):
    l, dl = p["l"], p["dl"]
    l1 = l + dl
    return 1j * dl / FOUR_PI * math.sqrt((2 * l + 1) * (2 * l1 + 1)) * g.v[2] * (
        g.b[2] * g.P(l1, 2) - g.a[2] * g.P(l, 2))


register(TheoremSpec(
    id="mixed.n1t1.m0",
    family="scalar-bilocal",
    citation="eq:mix3a",
    domain="l >= 0, l1 = l + dl, dl = +-1",
    lhs=lambda p, a, b: scalar_sum(p["l"] + p["dl"], p["l"], 0,
                                   (lambda w: (lambda lz: lz * w(lz)))(_rmat6a_w(p)), a, b),
    rhs=_mix3a,
    valid=_shift_params,
))


def _mix3b(p, g):
    l, dl, m = p["l"], p["dl"], p["m"]
    l1 = l + dl
    a, b, v = g.a, g.b, g.v
    vm, am, bm = g.pm(v, m), g.pm(a, m), g.pm(b, m)
    return -1 / (2 * FOUR_PI) * math.sqrt((2 * l + 1) * (2 * l1 + 1)) * (
        1j * m * (vm * b[2] + v[2] * bm) * g.P(l1, 2)
        - 1j * m * (vm * a[2] + v[2] * am) * g.P(l, 2)
        + dl * (l + (1 - dl) / 2) * (bm * g.P(l1, 1) - am * g.P(l, 1))
    )


register(TheoremSpec(
    id="mixed.n1t1.m1",
    family="scalar-bilocal",
    citation="eq:mix3b",
    domain="l >= 0, l1 = l + dl, dl = +-1, m = +-1",
    lhs=lambda p, a, b: scalar_sum(p["l"] + p["dl"], p["l"], p["m"],
                                   (lambda w: (lambda lz: lz * w(lz)))(_rmat6b_w(p)), a, b),
    rhs=_mix3b,
    valid=_shift_m_params,
))


def _mix4(p, g):
    l, dl = p["l"], p["dl"]
    l1 = l + dl
    lm = _mean(p)
    a, b, x, v3 = g.a, g.b, g.x, g.v[2]
    a3, b3 = a[2], b[2]
    inner = (
        (-b3 * (1 - x**2) + 5 * b3 * v3**2) * g.P(l1, 3)
        - (-a3 * (1 - x**2) + 5 * a3 * v3**2) * g.P(l, 3)
        + (-a3 - 2 * x * b3 + 5 * a3 * b3**2) * g.P(l1, 2)
        - (-b3 - 2 * x * a3 + 5 * b3 * a3**2) * g.P(l, 2)
        - (lm - 0.5) * (lm + 1.5) * (b3 * g.P(l1, 1) - a3 * g.P(l, 1))
    )
    return -dl / (20 * math.pi) * math.sqrt((2 * l + 1) * (2 * l1 + 1)) * inner


register(TheoremSpec(
    id="mixed.n1t2.m0",
    family="scalar-bilocal",
    citation="eq:mix4",
    domain="l >= 0, l1 = l + dl, dl = +-1",
    lhs=lambda p, a, b: scalar_sum(p["l"] + p["dl"], p["l"], 0,
                                   (lambda w: (lambda lz: lz * lz * w(lz)))(_rmat6a_w(p)), a, b),
    rhs=_mix4,
    valid=_shift_params,
))


def _mix5(p, g):
    l = p["l"]
    a3, b3 = g.a[2], g.b[2]
    return 1 / FOUR_PI * math.sqrt((2 * l - 1) * (2 * l + 3)) * 1j * g.v[2] * (
        b3**2 * g.P(l + 1, 3) - 2 * b3 * a3 * g.P(l, 3) + a3**2 * g.P(l - 1, 3) - g.P(l, 2))


register(TheoremSpec(
    id="mixed.n2t1.m0",
    family="scalar-bilocal",
    citation="eq:mix5",
    domain="l >= 1; sums Y_{l+1}(b) Y_{l-1}(a)*",
    lhs=lambda p, a, b: scalar_sum(p["l"] + 1, p["l"] - 1, 0,
                                   (lambda w: (lambda lz: lz * w(lz)))(_w7a(p["l"])), a, b),
    rhs=_mix5,
    valid=_rmat7_params,
    notes="prefactor sqrt((2l-1)(2l_1+3)) read as sqrt((2l-1)(2l+3))",
))


# -- inverse Clebsch-Gordan series (local) --------------------------------------

def _mix6_params(L):
    for l in range(L + 1):
        for n in range(0, 3):
            for t in range(0, 3):
                for dl in (SIGNS if n else (1,)):
                    ln = l + dl * n
                    if ln < 0:
                        continue
                    k = n + t
                    for m in range(-k, k + 1):
                        yield {"l": l, "n": n, "t": t, "dl": dl, "m": m}


def _mix6_lhs(p, a, b):
    l, k, m = p["l"], p["n"] + p["t"], p["m"]
    ln = p["l"] + p["dl"] * p["n"]
    return scalar_sum(ln, l, m, lambda lz: cg(l, lz, k, m, ln, lz + m), a, b)


def _mix6(p, g):
    l, k, m = p["l"], p["n"] + p["t"], p["m"]
    ln = p["l"] + p["dl"] * p["n"]
    return math.sqrt((2 * l + 1) * (2 * ln + 1) / (2 * k + 1)) * cg(l, 0, k, 0, ln, 0) \
        / math.sqrt(FOUR_PI) * spherical_harmonic(k, m, g.da)


register(TheoremSpec(
    id="local.inverse-cg",
    family="local",
    citation="eq:mix6",
    domain="l >= 0, 0 <= n, t <= 2, l_n = l + dl*n, |m| <= n+t; b = a",
    lhs=_mix6_lhs,
    rhs=_mix6,
    valid=_mix6_params,
    local=True,
))
