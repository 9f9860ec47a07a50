"""Sums of one scalar and one tensor spherical harmonic, bilocal and local.

Tensor harmonics Y^{l_k n}_{l lz} carry orbital l_k = l + k*dl, dl = +-1,
spin n and total j = l; they are evaluated at b, the scalar Y_{l lz} at a.
"""
from __future__ import annotations

import math

import numpy as np

from ..angular import cg
from ..harmonics import spin_harmonic_block
from .geometry import DELTA, EPS, FOUR_PI
from .registry import TheoremSpec, register
from .sums import scalar_tensor_sum, tensor_scalar_sum

SIGNS = (1, -1)


def dfact(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial of {n}")
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def _fact_ratio(top: int, bottom: int) -> float:
    """top! / bottom! for integers."""
    return math.factorial(top) / math.factorial(bottom)


def _triangle(a: int, b: int, c: int) -> bool:
    return a >= 0 and b >= 0 and c >= 0 and abs(a - b) <= c <= a + b


def _st_params(rank: int, shift: int, extra=None):
    """Valid (l, dl) for Y^{l + dl*shift, rank}_{l lz}."""
    def gen(L):
        for l in range(L + 1):
            for dl in (SIGNS if shift else (1,)):
                lk = l + dl * shift
                if _triangle(lk, rank, l) and (extra is None or extra(l, dl)):
                    yield ({"l": l, "dl": dl} if shift else {"l": l})
    return gen


def _st_vanishing(rank: int):
    """(l, dl, shift) with |shift| = rank + 1: the tensor harmonic cannot reach j = l."""
    def gen(L):
        for l in range(L + 1):
            for dl in SIGNS:
                lk = l + dl * (rank + 1)
                if lk >= 0:
                    yield {"l": l, "dl": dl, "shift": rank + 1}
    return gen


def _st_lhs(rank: int, shift: int, power: int = 0):
    def lhs(p, a, b):
        l = p["l"]
        sh = p.get("shift", shift)
        lk = l + p.get("dl", 1) * sh
        w = None if power == 0 else (lambda lz: float(lz) ** power)
        return scalar_tensor_sum(lk, rank, l, w, a, b)
    return lhs


def _ls(p, k=1):
    return p["l"] + p.get("dl", 1) * k


# -- general swap relation ---------------------------------------------------------

def _swap_params(L):
    for l in range(L + 1):
        for k in range(1, 4):
            for n in range(0, k + 1):
                for dl in (SIGNS if n else (1,)):
                    ln = l + dl * n
                    if _triangle(l, k, ln):
                        yield {"l": l, "n": n, "t": k - n, "dl": dl}


def _swap_lhs(p, a, b):
    k = p["n"] + p["t"]
    ln = p["l"] + p["dl"] * p["n"]
    return tensor_scalar_sum(ln, k, p["l"], a, b)


def _swap_rhs_sum(p, a, b):
    k = p["n"] + p["t"]
    l, ln = p["l"], p["l"] + p["dl"] * p["n"]
    return (-1) ** p["n"] * math.sqrt((2 * ln + 1) / (2 * l + 1)) * scalar_tensor_sum(ln, k, l, None, a, b)


register(TheoremSpec(
    id="scaten.swap",
    family="scalar-tensor",
    citation="eq:sca-ten-addthr1",
    domain="l >= 0, 1 <= n+t <= 3, l_n = l + dl*n",
    lhs=_swap_lhs,
    rhs=lambda p, g: _swap_rhs_sum(p, g.da, g.db),
    valid=_swap_params,
    notes="both sides are finite sums; first equality only",
))


# -- vector harmonics --------------------------------------------------------------

def _v1(p, g):
    l = p["l"]
    return 1j / FOUR_PI * (2 * l + 1) / math.sqrt(l * (l + 1)) * g.v * g.P(l, 1)


def _v1b(p, g):
    l, l1 = p["l"], _ls(p)
    return -math.sqrt(2) / FOUR_PI * math.sqrt((2 * l + 1) / (l1 + l + 1)) * (
        g.b * g.P(l1, 1) - g.a * g.P(l, 1))


# -- rank 2 ----------------------------------------------------------------------------

def _r2a(p, g):
    l = p["l"]
    c = -math.sqrt(1.5) / FOUR_PI * (2 * l + 1) / math.sqrt(l * (l + 1)) / math.sqrt((2 * l - 1) * (2 * l + 3))
    return c * (g.s0(g.v, g.v) * g.P(l, 2) + g.s0(g.b, g.a) * g.P(l, 1))


def _r2b(p, g):
    l, l1 = p["l"], _ls(p)
    c = -1j / (2 * math.pi) * math.sqrt(2 * l + 1) * math.sqrt(dfact(l1 + l - 3) / dfact(l1 + l + 3))
    return c * (g.s(g.b, g.v) * g.P(l1, 2) - g.s(g.a, g.v) * g.P(l, 2))


def _r2c(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    c = 1 / FOUR_PI / math.sqrt(2 * l2 + 1) * math.sqrt(
        (l2 + l - 1) * (l2 + l + 3) / ((l2 + l) * (l2 + l + 1) * (l2 + l + 2)))
    a, b = g.a, g.b
    return c * (g.s0(b, b) * g.P(l2, 2) - 2 * g.s0(b, a) * g.P(l1, 2) + g.s0(a, a) * g.P(l, 2))


# -- rank 3 ----------------------------------------------------------------------------

def _r3a(p, g):
    l = p["l"]
    c = -1j / (2 * math.pi) * math.sqrt(10) / 3 * math.sqrt(1 / _fact_ratio(2 * l + 4, 2 * l - 3)) * (2 * l + 1) ** 1.5
    return c * (g.s0(g.v, g.v, g.v) * g.P(l, 3) + 3 * g.s0(g.b, g.a, g.v) * g.P(l, 2))


def _r3b(p, g):
    l, l1 = p["l"], _ls(p)
    c = 1 / FOUR_PI * math.sqrt(10 / 3) * math.sqrt(2 * l + 1) * math.sqrt(
        1 / _fact_ratio(l1 + l + 4, l1 + l - 3)) * math.sqrt((l1 + l) * (l1 + l + 2))
    a, b, v = g.a, g.b, g.v
    return c * (g.s0(b, v, v) * g.P(l1, 3) - g.s0(a, v, v) * g.P(l, 3)
                + g.s0(b, b, a) * g.P(l1, 2) - g.s0(b, a, a) * g.P(l, 2))


def _r3c(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    c = 1j / (8 * math.pi) / math.sqrt(3) / ((2 * l1 + 1) * math.sqrt(2 * l2 + 1)) * math.sqrt(
        dfact(2 * l1 + 3) / dfact(2 * l1 - 3)) * math.sqrt(1 / _fact_ratio(l1 + 2, l1 - 2))
    a, b, v = g.a, g.b, g.v
    return c * (g.s0(b, b, v) * g.P(l2, 3) - 2 * g.s0(b, a, v) * g.P(l1, 3) + g.s0(a, a, v) * g.P(l, 3))


def _r3d(p, g):
    l, l1, l2, l3 = p["l"], _ls(p), _ls(p, 2), _ls(p, 3)
    lm = (l + l3) / 2
    c = -1 / (3 * math.pi) * math.sqrt(2) * math.sqrt(lm + 2) / (
        (2 * l1 + 1) * (2 * l2 + 1) * math.sqrt(2 * l3 + 1)) * math.sqrt(
        dfact(l3 + l - 3) / dfact(l3 + l + 3)) * math.sqrt((lm + 1) * lm * (lm - 1))
    a, b = g.a, g.b
    return c * (g.s0(b, b, b) * g.P(l3, 3) - 3 * g.s0(b, b, a) * g.P(l2, 3)
                + 3 * g.s0(b, a, a) * g.P(l1, 3) - g.s0(a, a, a) * g.P(l, 3))


# -- vector harmonics weighted by l_z and l_z^2 ---------------------------------------

def _anti3(g):
    """(a^i b^3 - a^3 b^i) as a vector in i."""
    return g.a * g.b[2] - g.a[2] * g.b


def _w1a(p, g):
    l = p["l"]
    c = -1 / (8 * math.pi) * (2 * l + 1) / math.sqrt(l * (l + 1))
    return c * (g.s0(g.v, g.v)[:, 2] * g.P(l, 2) + g.s0(g.b, g.a)[:, 2] * g.P(l, 1)
                + _anti3(g) * g.P(l, 1) - 2 / 3 * l * (l + 1) * DELTA[:, 2] * g.P(l))


def _w1b(p, g):
    l, l1 = p["l"], _ls(p)
    c = -1j / (8 * math.pi) * math.sqrt(2) * math.sqrt((2 * l + 1) / (l1 + l + 1))
    bp = g.b * g.P(l1, 1) - g.a * g.P(l, 1)
    return c * ((g.s(g.b, g.v)[:, 2] * g.P(l1, 2) - g.s(g.a, g.v)[:, 2] * g.P(l, 2))
                - ((l1 - l) * (l + 0.5) - 0.5) * np.einsum("ip,p->i", EPS[:, 2, :], bp))


def _w2a(p, g):
    l = p["l"]
    ll = l * (l + 1)
    a, b, v = g.a, g.b, g.v
    c = -1j / FOUR_PI * (2 * l + 1) / math.sqrt(ll)
    return c * (
        (g.s0(v, v, v)[:, 2, 2] * g.P(l, 3) + 3 * g.s0(b, a, v)[:, 2, 2] * g.P(l, 2)) / 6
        + _anti3(g) * v[2] * g.P(l, 2)
        + 0.5 * np.einsum("ih,h->i", EPS[:, 2, :], g.s0(b, a)[:, 2]) * g.P(l, 1)
        - (ll + 0.5) / 5 * v * g.P(l, 1)
        - 2 / 5 * (ll - 0.75) * v[2] * DELTA[:, 2] * g.P(l, 1)
    )


def _w2b(p, g):
    l, l1 = p["l"], _ls(p)
    ll, l1l1 = l * (l + 1), l1 * (l1 + 1)
    a, b, v = g.a, g.b, g.v
    c = -1 / (2 * math.pi) * math.sqrt((l + 0.5) / (l1 + l + 1))
    first = -(g.s0(b, v, v)[:, 2, 2] * g.P(l1, 3) - g.s0(a, v, v)[:, 2, 2] * g.P(l, 3)
              + g.s0(b, b, a)[:, 2, 2] * g.P(l1, 2) - g.s0(a, a, b)[:, 2, 2] * g.P(l, 2)) / 6
    second = ((l1 - l) * (l1 + l + 1) - 3) / 6 * np.einsum(
        "ip,p->i", EPS[:, 2, :], g.s0(b, v)[:, 2] * g.P(l1, 2) - g.s0(a, v)[:, 2] * g.P(l, 2))
    third = -(l1l1 - 9 * ll - 2) / 20 * (b * g.P(l1, 1) - a * g.P(l, 1))
    fourth = (3 * l1l1 - 7 * ll - 6) / 20 * (b[2] * g.P(l1, 1) - a[2] * g.P(l, 1)) * DELTA[:, 2]
    return c * (first + second + third + fourth)


# -- rank-2 harmonics weighted by l_z ---------------------------------------------------

def _anti(u, w):
    return np.multiply.outer(u, w) - np.multiply.outer(w, u)


def _t1a(p, g):
    l = p["l"]
    ll = l * (l + 1)
    a, b, v = g.a, g.b, g.v
    ab = _anti(a, b)  # ab[i, j] = a^i b^j - a^j b^i
    c = -1j / (2 * math.pi) * math.sqrt(1.5) * (2 * l + 1) / math.sqrt(ll) / math.sqrt((2 * l - 1) * (2 * l + 3))
    vv = g.s0(v, v)
    ba = g.s0(b, a)
    p2 = (
        -np.einsum("ijh,h->ij", EPS, vv[:, 2])
        + 2 * g.s0(b, a, v)[:, :, 2]
        + 4 / 3 * (ab * v[2] + np.multiply.outer(v, ab[:, 2]) + 2 * np.multiply.outer(ab[:, 2], v))
    ) / 4
    p1 = (
        (-0.5 * np.einsum("ijh,h->ij", EPS, ba[:, 2])
         + np.einsum("hj,hi->ij", EPS[:, :, 2], ba)
         + 2 * np.einsum("ih,hj->ij", EPS[:, 2, :], ba)) / 6
        - 0.25 * np.einsum("ijh,h->ij", EPS, ab[:, 2])
        + 2 / 15 * (ll - 0.75) * DELTA * v[2]
        - (ll + 0.5) / 5 * np.multiply.outer(v, DELTA[:, 2])
        - (ll - 2) / 5 * np.multiply.outer(DELTA[:, 2], v)
    )
    return c * (g.s0(v, v, v)[:, :, 2] / 6 * g.P(l, 3) + p2 * g.P(l, 2) + p1 * g.P(l, 1))


def _t1b(p, g):
    l, l1 = p["l"], _ls(p)
    a, b, v = g.a, g.b, g.v
    c = math.sqrt(2 * l + 1) / math.pi * math.sqrt(dfact(l1 + l - 3) / dfact(l1 + l + 3))
    first = (g.s0(b, v, v)[:, :, 2] * g.P(l1, 3) - g.s0(a, v, v)[:, :, 2] * g.P(l, 3)
             + g.s0(b, b, a)[:, :, 2] * g.P(l1, 2) - g.s0(b, a, a)[:, :, 2] * g.P(l, 2)) / 6

    def epsv(u):
        uv = g.s0(u, v)
        m = np.einsum("ih,hj->ij", EPS[:, :, 2], uv)
        return m + m.T

    second = (l1 * (l1 + 1) - l * (l + 1) - 6) / 24 * (epsv(b) * g.P(l1, 2) - epsv(a) * g.P(l, 2))

    def dv(u):
        return np.multiply.outer(u, DELTA[:, 2]) + np.multiply.outer(DELTA[:, 2], u) - 2 / 3 * DELTA * u[2]

    third = -3 / 80 * (l1 + l - 1) * (l1 + l + 3) * (dv(b) * g.P(l1, 1) - dv(a) * g.P(l, 1))
    return c * (first + second + third)


def _t1c(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    a, b, v = g.a, g.b, g.v
    c = 1j / (24 * math.pi) * math.sqrt((2 * l + 1) / (2 * l1 + 1)) / math.sqrt(l1 * (l1 + 1))
    first = g.s0(b, b, v)[:, :, 2] * g.P(l2, 3) - 2 * g.s0(b, a, v)[:, :, 2] * g.P(l1, 3) \
        + g.s0(a, a, v)[:, :, 2] * g.P(l, 3)
    op = np.einsum("hj,pi->ijhp", EPS[:, :, 2], DELTA) - np.einsum("ih,pj->ijhp", EPS[:, :, 2], DELTA)
    q = g.s0(b, b) * g.P(l2, 2) - 2 * g.s0(b, a) * g.P(l1, 2) + g.s0(a, a) * g.P(l, 2)
    second = -0.5 * ((l1 - l) * (l2 + l + 1) - 3) * np.einsum("ijhp,hp->ij", op, q)
    return c * (first + second)


_BILOCAL = [
    # id, citation, rank, shift, power, rhs, notes
    ("scaten.r1.d0", "eq:sca-ten-addthr2a", 1, 0, 0, _v1, ""),
    ("scaten.r1.d1", "eq:sca-ten-addthr2b", 1, 1, 0, _v1b, ""),
    ("scaten.r2.d0", "eq:sca-ten-addthr3a", 2, 0, 0, _r2a, ""),
    ("scaten.r2.d1", "eq:sca-ten-addthr3b", 2, 1, 0, _r2b, ""),
    ("scaten.r2.d2", "eq:sca-ten-addthr3c", 2, 2, 0, _r2c, ""),
    ("scaten.r3.d0", "eq:sca-ten-addthr4a", 3, 0, 0, _r3a, ""),
    ("scaten.r3.d1", "eq:sca-ten-addthr4b", 3, 1, 0, _r3b, ""),
    ("scaten.r3.d2", "eq:sca-ten-addthr4c", 3, 2, 0, _r3c, ""),
    ("scaten.r3.d3", "eq:sca-ten-addthr4d", 3, 3, 0, _r3d, "<l> = (l + l_3)/2"),
    ("scaten.lz.r1.d0", "eq:sca-ten-addthr5a", 1, 0, 1, _w1a, "component j = 3"),
    ("scaten.lz.r1.d1", "eq:sca-ten-addthr5b", 1, 1, 1, _w1b, "component j = 3"),
    ("scaten.lz2.r1.d0", "eq:sca-ten-addthr6a", 1, 0, 2, _w2a, "components j = k = 3"),
    ("scaten.lz2.r1.d1", "eq:sca-ten-addthr6b", 1, 1, 2, _w2b, "components j = k = 3"),
    ("scaten.lz.r2.d0", "eq:sca-ten-addthr7a", 2, 0, 1, _t1a, "component k = 3"),
    ("scaten.lz.r2.d1", "eq:sca-ten-addthr7b", 2, 1, 1, _t1b, "component k = 3"),
    ("scaten.lz.r2.d2", "eq:sca-ten-addthr7c", 2, 2, 1, _t1c, "component k = 3"),
]

for _id, _cit, _rank, _shift, _pow, _rhs, _notes in _BILOCAL:
    register(TheoremSpec(
        id=_id,
        family="scalar-tensor",
        citation=_cit,
        domain=f"sum_lz lz^{_pow} Y^(l{'+' + str(_shift) + 'dl' if _shift else ''}, {_rank})_(l lz)(b) Y_(l lz)(a)*; triangle-valid l",
        lhs=_st_lhs(_rank, _shift, _pow),
        rhs=_rhs,
        valid=_st_params(_rank, _shift),
        vanishing=_st_vanishing(_rank),
        notes=_notes,
    ))


# -- local forms (b = a) ---------------------------------------------------------------

def _local0_params(L):
    for l in range(L + 1):
        for k in range(0, 4):
            for n in range(0, k + 1):
                for dl in (SIGNS if n else (1,)):
                    ln = l + dl * n
                    if _triangle(l, k, ln):
                        yield {"l": l, "n": n, "t": k - n, "dl": dl}


def _local0_lhs(p, a, b):
    k = p["n"] + p["t"]
    ln = p["l"] + p["dl"] * p["n"]
    return tensor_scalar_sum(ln, k, p["l"], a, b)


def _local0_rhs(p, g):
    k = p["n"] + p["t"]
    l, ln = p["l"], p["l"] + p["dl"] * p["n"]
    c = (-1) ** k * math.sqrt((2 * l + 1) * (2 * ln + 1)) * cg(l, 0, k, 0, ln, 0) / math.sqrt(FOUR_PI)
    return c * spin_harmonic_block(k, k, 0, g.da)[0]


register(TheoremSpec(
    id="scaten.local.general",
    family="local",
    citation="eq:sca-ten-local0",
    domain="b = a, 0 <= n+t <= 3, l_n = l + dl*n",
    lhs=_local0_lhs,
    rhs=_local0_rhs,
    valid=_local0_params,
    local=True,
    parent="scaten.swap",
))


def _loc1(p, g):
    l, l1 = p["l"], _ls(p)
    return -(l1 - l) / FOUR_PI * math.sqrt((l + 0.5) * (l1 + l + 1)) * g.a + 0j


def _loc2a(p, g):
    l = p["l"]
    return -1 / (8 * math.pi) * math.sqrt(1.5) * (2 * l + 1) * math.sqrt(
        l * (l + 1) / ((2 * l - 1) * (2 * l + 3))) * g.s0(g.a, g.a) + 0j


def _loc2b(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    return 3 / (16 * math.pi) * math.sqrt(l1 * (l1 + 1)) * math.sqrt(
        (2 * l + 1) / (l2 + l + 1)) * g.s0(g.a, g.a) + 0j


def _loc3a(p, g):
    l, l1 = p["l"], _ls(p)
    s = l1 + l
    return (l1 - l) / (64 * math.pi) * math.sqrt(10 / 3) * math.sqrt(2 * l + 1) * math.sqrt(
        (s - 1) * (s + 1) * (s + 3) / ((s - 2) * (s + 4))) * g.s0(g.a, g.a, g.a) + 0j


def _loc3b(p, g):
    l, l1, l3 = p["l"], _ls(p), _ls(p, 3)
    s = l3 + l
    return -(l1 - l) / (64 * math.pi) * 5 * math.sqrt(2) / 3 * math.sqrt(2 * l + 1) * math.sqrt(
        (s - 1) * (s + 1) * (s + 3) / (s * (s + 2))) * g.s0(g.a, g.a, g.a) + 0j


def _loc4a(p, g):
    l = p["l"]
    a = g.a
    return -1 / (8 * math.pi) * (2 * l + 1) * math.sqrt(l * (l + 1)) * (a * a[2] - DELTA[:, 2]) + 0j


def _loc4b(p, g):
    l, l1 = p["l"], _ls(p)
    return 1j / (8 * math.pi) * math.sqrt(2) * math.sqrt((2 * l + 1) / (l1 + l + 1)) * l * (l + 1) * (
        EPS[:, 2, :] @ g.a)


def _loc5a(p, g):
    l = p["l"]
    return -1j / (8 * math.pi) * (2 * l + 1) * math.sqrt(l * (l + 1)) * (EPS[:, 2, :] @ g.a) * g.a[2]


def _loc5b(p, g):
    l, l1 = p["l"], _ls(p)
    a = g.a
    ll, l1l1 = l * (l + 1), l1 * (l1 + 1)
    c = (l1 - l) / (2 * math.pi) * math.sqrt((l + 0.5) * (l1 + l + 1))
    return c * ((l1 + l - 1) * (l1 + l + 3) / 96 * g.s0(a, a, a)[:, 2, 2]
                + (l1l1 - 9 * ll - 2) / 40 * a
                - (3 * l1l1 - 7 * ll - 6) / 40 * a[2] * DELTA[:, 2]) + 0j


def _loc6a(p, g):
    l = p["l"]
    aa = g.s0(g.a, g.a)
    c = -1j / (24 * math.pi) * math.sqrt(1.5) * (2 * l + 1) * math.sqrt(l * (l + 1) / ((2 * l - 1) * (2 * l + 3)))
    return c * (-0.5 * np.einsum("ijh,h->ij", EPS, aa[:, 2])
                + np.einsum("hj,hi->ij", EPS[:, :, 2], aa)
                + 2 * np.einsum("ih,hj->ij", EPS[:, 2, :], aa))


def _loc6b(p, g):
    l, l1 = p["l"], _ls(p)
    a = g.a
    s = l1 + l
    c = (l1 - l) / (32 * math.pi) * math.sqrt(2 * l + 1) * math.sqrt((s - 1) * (s + 1) * (s + 3))
    dv = np.multiply.outer(a, DELTA[:, 2]) + np.multiply.outer(DELTA[:, 2], a) - 2 / 3 * DELTA * a[2]
    return c * (g.s0(a, a, a)[:, :, 2] / 3 - 3 / 5 * dv) + 0j


def _loc6c(p, g):
    l, l1 = p["l"], _ls(p)
    aa = g.s0(g.a, g.a)
    m = np.einsum("ih,hj->ij", EPS[:, 2, :], aa)
    c = -1j / (32 * math.pi) * ((l1 - l) * (2 * l + 1) - 1) * math.sqrt((2 * l + 1) / (2 * l1 + 1)) * math.sqrt(
        l1 * (l1 + 1))
    return c * (m + m.T)


_LOCAL = [
    ("scaten.local.r1.d1", "eq:sca-ten-local1", 1, 1, 0, _loc1, "scaten.r1.d1"),
    ("scaten.local.r2.d0", "eq:sca-ten-local2a", 2, 0, 0, _loc2a, "scaten.r2.d0"),
    ("scaten.local.r2.d2", "eq:sca-ten-local2b", 2, 2, 0, _loc2b, "scaten.r2.d2"),
    ("scaten.local.r3.d1", "eq:sca-ten-local3a", 3, 1, 0, _loc3a, "scaten.r3.d1"),
    ("scaten.local.r3.d3", "eq:sca-ten-local3b", 3, 3, 0, _loc3b, "scaten.r3.d3"),
    ("scaten.local.lz.r1.d0", "eq:sca-ten-local4a", 1, 0, 1, _loc4a, "scaten.lz.r1.d0"),
    ("scaten.local.lz.r1.d1", "eq:sca-ten-local4b", 1, 1, 1, _loc4b, "scaten.lz.r1.d1"),
    ("scaten.local.lz2.r1.d0", "eq:sca-ten-local5a", 1, 0, 2, _loc5a, "scaten.lz2.r1.d0"),
    ("scaten.local.lz2.r1.d1", "eq:sca-ten-local5b", 1, 1, 2, _loc5b, "scaten.lz2.r1.d1"),
    ("scaten.local.lz.r2.d0", "eq:sca-ten-local6a", 2, 0, 1, _loc6a, "scaten.lz.r2.d0"),
    ("scaten.local.lz.r2.d1", "eq:sca-ten-local6b", 2, 1, 1, _loc6b, "scaten.lz.r2.d1"),
    ("scaten.local.lz.r2.d2", "eq:sca-ten-local6c", 2, 2, 1, _loc6c, "scaten.lz.r2.d2"),
]

for _id, _cit, _rank, _shift, _pow, _rhs, _parent in _LOCAL:
    register(TheoremSpec(
        id=_id,
        family="local",
        citation=_cit,
        domain="b = a; triangle-valid l",
        lhs=_st_lhs(_rank, _shift, _pow),
        rhs=_rhs,
        valid=_st_params(_rank, _shift),
        local=True,
        parent=_parent,
    ))
