"""Addition theorems for two spin spherical harmonics.

Left sides are sum_{jz} Y^{l' s'}_{j jz}(b) (x) conj(Y^{l s}_{j jz}(a)) with
the indices of the first harmonic followed by those of the second:
(A, B) for two spin-1/2, (r, s) for two spin-1, (i, A, j, B) for two
spin-3/2, (i, A, B) for 3/2 x 1/2 and (A, i, B) for 1/2 x 3/2.
Orbital momenta are l_k = l + k*dl.  Several theorems carry coefficients
with no closed form here; those are registered in extraction mode with
one tensor structure per unknown coefficient.
"""
from __future__ import annotations

import math

import numpy as np

from ..angular import half
from .geometry import (DELTA, EPS, FOUR_PI, SIGMA, dot_sigma, left32, right32,
                       sandwich32)
from .registry import TheoremSpec, register
from .sums import seed_sum

SIGNS = (1, -1)
I2 = np.eye(2)

# (p q)_0 relative to {p q}_0, fixed by calibration against the brute-force sums.
PAREN0 = 0.5


def jparam(tj: int):
    """Parameter value for j given 2j: int when integral, float otherwise."""
    return tj // 2 if tj % 2 == 0 else tj / 2


def _tri(l: int, ts: int, tj: int) -> bool:
    return l >= 0 and tj >= 0 and abs(2 * l - ts) <= tj <= 2 * l + ts and (tj - ts) % 2 == 0


def _spin_params(tsp, ts, shift, offsets):
    """Parameters (l, [dl,] j) with 2j - 2l in offsets[dl] and both harmonics non-zero."""
    def gen(L):
        for l in range(L + 1):
            for dl in (SIGNS if shift else (1,)):
                lp = l + dl * shift
                if lp < 0:
                    continue
                for off in offsets[dl]:
                    tj = 2 * l + off
                    if _tri(lp, tsp, tj) and _tri(l, ts, tj):
                        p = {"l": l, "dl": dl} if shift else {"l": l}
                        p["j"] = jparam(tj)
                        yield p
    return gen


def _spin_vanishing(tsp, ts, shift, offsets):
    """Every j of the right parity, up to one unit beyond the largest coupling, not yielded by _spin_params."""
    def gen(L):
        for l in range(L + 1):
            for dl in (SIGNS if shift else (1,)):
                lp = l + dl * shift
                if lp < 0:
                    continue
                top = 2 * max(l, lp) + max(ts, tsp) + 2
                for tj in range(ts % 2, top + 1, 2):
                    if tj - 2 * l in offsets[dl] and _tri(lp, tsp, tj) and _tri(l, ts, tj):
                        continue
                    p = {"l": l, "dl": dl} if shift else {"l": l}
                    p["j"] = jparam(tj)
                    yield p
    return gen


def _seed_lhs(tsp, ts, shift):
    def lhs(p, a, b):
        l = p["l"]
        lp = l + p.get("dl", 1) * shift
        return seed_sum(lp, half(tsp / 2), l, half(ts / 2), half(p["j"]), a, b)
    return lhs


def _ls(p, k=1):
    return p["l"] + p.get("dl", 1) * k


def _j(p) -> float:
    return float(p["j"])


def _paren0(g, u, w):
    return PAREN0 * g.s0(u, w)


def _spin_theorem(id, citation, tsp, ts, shift, offsets, domain, *, rhs=None, structures=None,
                  local=False, parent=None, notes="", expected=None):
    register(TheoremSpec(
        id=id,
        family="local" if local else "spin-spin",
        citation=citation,
        domain=domain,
        lhs=_seed_lhs(tsp, ts, shift),
        rhs=rhs,
        structures=structures,
        valid=_spin_params(tsp, ts, shift, offsets),
        vanishing=_spin_vanishing(tsp, ts, shift, offsets),
        local=local,
        parent=parent,
        notes=notes,
        expected=expected,
    ))


# -- spin 1/2 ----------------------------------------------------------------------------

_HALF_SAME = {1: (1, -1)}
_HALF_D1 = {1: (1,), -1: (-1,)}


def _half_same(p, g):
    l, j = p["l"], _j(p)
    return (j + 0.5) / FOUR_PI * g.P(l) * I2 + 2j * (j - l) / FOUR_PI * g.P(l, 1) * dot_sigma(g.v)


def _half_d1(p, g):
    l, l1 = p["l"], _ls(p)
    return -(l1 - l) / FOUR_PI * (dot_sigma(g.b) * g.P(l1, 1) - dot_sigma(g.a) * g.P(l, 1)) + 0j


_spin_theorem("spinhalf.same-l", "eq:add1half2", 1, 1, 0, _HALF_SAME, "j = l +- 1/2", rhs=_half_same)
_spin_theorem("spinhalf.delta1", "eq:add1half3", 1, 1, 1, _HALF_D1,
              "l1 = l + dl, j = l + dl/2", rhs=_half_d1)
_spin_theorem("spinhalf.local-same", "eq:add1halflocal", 1, 1, 0, _HALF_SAME, "b = a, j = l +- 1/2",
              rhs=lambda p, g: (2 * _j(p) + 1) / (8 * math.pi) * I2 + 0j,
              local=True, parent="spinhalf.same-l")
_spin_theorem("spinhalf.local-delta1", "eq:add1halflocal", 1, 1, 1, _HALF_D1,
              "b = a, l1 = l + dl, j = l + dl/2; <l> = (l + l1)/2",
              rhs=lambda p, g: -(p["l"] + _ls(p) + 1) / (8 * math.pi) * dot_sigma(g.a) + 0j,
              local=True, parent="spinhalf.delta1")


# -- spin 1 ------------------------------------------------------------------------------

_ONE_SAME = {1: (-2, 0, 2)}
_ONE_D1 = {1: (2, 0), -1: (0, -2)}
_ONE_D2 = {1: (2,), -1: (-2,)}


def _one_same_structures(p, g):
    l = p["l"]
    c = (2 * l + 1) / FOUR_PI
    return [
        ("C[1,1,0]", c * g.P(l) * DELTA + 0j),
        ("C[1,1,1]", c * g.P(l, 1) * g.anti(g.a, g.b) + 0j),
        ("C[1,1,2]", c * 0.5 * (g.P(l, 1) * g.s0(g.a, g.b) + g.P(l, 2) * g.s0(g.v, g.v)) + 0j),
    ]


def _trace_c0(s_twice):
    """C^{ss0}_{llj} = (2j+1)/((2s+1)(2l+1)), fixed by the trace sum rule."""
    def expected(p):
        return {f"C[{half(s_twice / 2)},{half(s_twice / 2)},0]":
                (2 * _j(p) + 1) / ((s_twice + 1) * (2 * p["l"] + 1))}
    return expected


def _one_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = -1j / (8 * math.pi) * (l1 - l)
    return [
        ("C[1,1,1]", c * 2 * np.einsum("rsh,h->rs", EPS, g.b * g.P(l1, 1) - g.a * g.P(l, 1))),
        ("C[1,1,2]", c * (g.s(g.v, g.b) * g.P(l1, 2) - g.s(g.v, g.a) * g.P(l, 2))),
    ]


def _one_d2(p, g):
    l, l1, l2, j = p["l"], _ls(p), _ls(p, 2), _j(p)
    return -1 / FOUR_PI / math.sqrt(j * (j + 1)) * (
        _paren0(g, g.b, g.b) * g.P(l2, 2) - g.s0(g.b, g.a) * g.P(l1, 2) + _paren0(g, g.a, g.a) * g.P(l, 2)) + 0j


def _one_local_same_structures(p, g):
    l = p["l"]
    c = (2 * l + 1) / FOUR_PI
    return [
        ("C[1,1,0]", c * DELTA + 0j),
        ("C[1,1,2]", c * 0.25 * l * (l + 1) * g.s0(g.a, g.a) + 0j),
    ]


def _one_local_d1(p, g):
    l, l1, j = p["l"], _ls(p), _j(p)
    lm = (l + l1) / 2
    return 1j / (8 * math.pi) * math.sqrt(2 * j + 1) * math.sqrt(2 * j - lm + 0.5) * (EPS @ g.a)


def _one_local_d2(p, g):
    j = _j(p)
    return -3 / (8 * math.pi) * math.sqrt(j * (j + 1)) * _paren0(g, g.a, g.a) + 0j


_spin_theorem("spin1.same-l", "eq:add1-1", 2, 2, 0, _ONE_SAME, "j = l, l +- 1",
              structures=_one_same_structures, expected=_trace_c0(2))
_spin_theorem("spin1.delta1", "eq:add1-2", 2, 2, 1, _ONE_D1,
              "l1 = l + dl; j in {l1, l}", structures=_one_d1_structures)
_spin_theorem("spin1.delta2", "eq:add1-3", 2, 2, 2, _ONE_D2, "l2 = l + 2dl, j = l1",
              rhs=_one_d2, notes=f"(p q)_0 = {PAREN0} {{p q}}_0")
_spin_theorem("spin1.local-same", "eq:add1-local", 2, 2, 0, _ONE_SAME, "b = a, j = l, l +- 1",
              structures=_one_local_same_structures, local=True, parent="spin1.same-l",
              expected=_trace_c0(2))
_spin_theorem("spin1.local-delta1", "eq:add1-local", 2, 2, 1, _ONE_D1,
              "b = a, l1 = l + dl, j in {l1, l}; <l> = (l + l1)/2",
              rhs=_one_local_d1, local=True, parent="spin1.delta1")
_spin_theorem("spin1.local-delta2", "eq:add1-local", 2, 2, 2, _ONE_D2, "b = a, l2 = l + 2dl, j = l1",
              rhs=_one_local_d2, local=True, parent="spin1.delta2")


# -- spin 3/2 ----------------------------------------------------------------------------

_TQ_SAME = {1: (-3, -1, 1, 3)}
_TQ_D1 = {1: (3, 1, -1), -1: (1, -1, -3)}
_TQ_D2 = {1: (3, 1), -1: (-1, -3)}
_TQ_D3 = {1: (3,), -1: (-3,)}


def _dd(m):
    """m^{hk} delta_CD in layout (h, C, k, D)."""
    return np.einsum("hk,CD->hCkD", m, I2)


def _ds(m):
    """m^{hkq} sigma^q_CD in layout (h, C, k, D)."""
    return np.einsum("hkq,qCD->hCkD", m, SIGMA)


def _tq_same_structures(p, g):
    l = p["l"]
    c = (2 * l + 1) / FOUR_PI
    a, b, v = g.a, g.b, g.v
    return [
        ("C[3/2,3/2,0]", c * sandwich32(_dd(DELTA) * g.P(l))),
        ("C[3/2,3/2,1]", c * sandwich32(1.5j * g.P(l, 1) * np.einsum("hk,CD->hCkD", DELTA, dot_sigma(v)))),
        ("C[3/2,3/2,2]", c * sandwich32(1.5 * _dd(g.s0(v, v) * g.P(l, 2) + g.s0(a, b) * g.P(l, 1)))),
        ("C[3/2,3/2,3]", c * sandwich32(0.25j * _ds(g.s0(v, v, v) * g.P(l, 3) + 3 * g.s0(a, b, v) * g.P(l, 2)))),
    ]


def _tq_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = (l1 - l) / FOUR_PI
    a, b, v = g.a, g.b, g.v
    return [
        ("C[3/2,3/2,1]", c * sandwich32(1.5 * np.einsum(
            "hk,CD->hCkD", DELTA, dot_sigma(b * g.P(l1, 1) - a * g.P(l, 1))))),
        ("C[3/2,3/2,2]", c * sandwich32(-1.5j * _dd(g.s0(b, v) * g.P(l1, 2) - g.s0(a, v) * g.P(l, 2)))),
        ("C[3/2,3/2,3]", c * sandwich32(0.25 * _ds(
            g.s0(b, v, v) * g.P(l1, 3) - g.s0(a, v, v) * g.P(l, 3)
            + g.s0(b, b, a) * g.P(l1, 2) - g.s0(a, a, b) * g.P(l, 2)))),
    ]


def _tq_d2_structures(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    c = -1 / FOUR_PI / (2 * l1 + 1)
    a, b, v = g.a, g.b, g.v
    return [
        ("C[3/2,3/2,2]", c * sandwich32(1.5 * _dd(
            g.s0(b, b) * g.P(l2, 2) + g.s0(a, a) * g.P(l, 2) - 2 * g.s0(b, a) * g.P(l1, 2)))),
        ("C[3/2,3/2,3]", c * sandwich32(0.25j * np.einsum("pqr,qCD->pCrD",
            g.s0(b, b, v) * g.P(l2, 3) + g.s0(a, a, v) * g.P(l, 3) - 2 * g.s0(b, a, v) * g.P(l1, 3), SIGMA))),
    ]


def _tq_d3(p, g):
    l, l1, l2, l3, j = p["l"], _ls(p), _ls(p, 2), _ls(p, 3), _j(p)
    a, b = g.a, g.b
    c = 1 / FOUR_PI * (l1 - l) / ((2 * l1 + 1) * (2 * l2 + 1)) * math.sqrt(j * (j + 1) / ((j - 0.5) * (j + 1.5)))
    t = (g.s0(b, b, b) * g.P(l3, 3) / 3 - g.s0(b, b, a) * g.P(l2, 3)
         + g.s0(b, a, a) * g.P(l1, 3) - g.s0(a, a, a) * g.P(l, 3) / 3)
    return c * sandwich32(np.einsum("pqr,qCD->pCrD", t, SIGMA))


def _tq_local_same_structures(p, g):
    l = p["l"]
    c = (2 * l + 1) / FOUR_PI
    return [
        ("C[3/2,3/2,0]", c * sandwich32(_dd(DELTA))),
        ("C[3/2,3/2,2]", c * sandwich32(_dd(0.75 * l * (l + 1) * g.s0(g.a, g.a)))),
    ]


def _tq_local_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = (l1 + l + 1) / (16 * math.pi)
    a = g.a
    return [
        ("C[3/2,3/2,1]", c * sandwich32(3 * np.einsum("hk,CD->hCkD", DELTA, dot_sigma(a)))),
        ("C[3/2,3/2,3]", c * sandwich32(_ds((l1 + l - 1) * (l1 + l + 3) / 16 * g.s0(a, a, a)))),
    ]


def _tq_local_d2_structures(p, g):
    l1 = _ls(p)
    c = -9 / (16 * math.pi) * l1 * (l1 + 1) / (2 * l1 + 1)
    return [("C[3/2,3/2,2]", c * sandwich32(_dd(g.s0(g.a, g.a))))]


def _tq_local_d3(p, g):
    l1, l2, j = _ls(p), _ls(p, 2), _j(p)
    tj = int(round(2 * j))
    c = 5 / (192 * math.pi) * math.sqrt(2 * j + 1) / ((2 * l1 + 1) * (2 * l2 + 1)) * math.sqrt(
        math.factorial(tj + 3) / math.factorial(tj - 2))
    return c * sandwich32(np.einsum("pqr,qCD->pCrD", g.s0(g.a, g.a, g.a), SIGMA))


_spin_theorem("spin32.same-l", "eq:add3hal1", 3, 3, 0, _TQ_SAME, "j = l +- 3/2, l +- 1/2",
              structures=_tq_same_structures, expected=_trace_c0(3))
_spin_theorem("spin32.delta1", "eq:add3hal2", 3, 3, 1, _TQ_D1, "l1 = l + dl; j = l + dl/2 +- 1, l + dl/2",
              structures=_tq_d1_structures)
_spin_theorem("spin32.delta2", "eq:add3hal3", 3, 3, 2, _TQ_D2, "l2 = l + 2dl; j = l + dl/2, l + 3dl/2",
              structures=_tq_d2_structures)
_spin_theorem("spin32.delta3", "eq:add3hal4", 3, 3, 3, _TQ_D3, "l3 = l + 3dl; j = l + 3dl/2", rhs=_tq_d3)
_spin_theorem("spin32.local-same", "eq:add3hal-local", 3, 3, 0, _TQ_SAME, "b = a, j = l +- 3/2, l +- 1/2",
              structures=_tq_local_same_structures, local=True, parent="spin32.same-l",
              expected=_trace_c0(3))
_spin_theorem("spin32.local-delta1", "eq:add3hal-local", 3, 3, 1, _TQ_D1, "b = a, l1 = l + dl",
              structures=_tq_local_d1_structures, local=True, parent="spin32.delta1")
_spin_theorem("spin32.local-delta2", "eq:add3hal-local", 3, 3, 2, _TQ_D2, "b = a, l2 = l + 2dl",
              structures=_tq_local_d2_structures, local=True, parent="spin32.delta2")
_spin_theorem("spin32.local-delta3", "eq:add3hal-local", 3, 3, 3, _TQ_D3, "b = a, l3 = l + 3dl, j = l + 3dl/2",
              rhs=_tq_local_d3, local=True, parent="spin32.delta3")


# -- spin 3/2 with spin 1/2 ----------------------------------------------------------------

_TH_SAME = {1: (1, -1)}
_TH_D1 = {1: (1, -1), -1: (1, -1)}          # j = l +- 1/2
_HT_D1 = {1: (3, 1), -1: (-1, -3)}          # j = l1 +- 1/2
_TH_D2 = {1: (1,), -1: (-1,)}
_HT_D2 = {1: (3,), -1: (-3,)}


def _th_same_structures(p, g):
    l = p["l"]
    c = (2 * l + 1) / (8 * math.pi) * math.sqrt(1.5)
    v = g.v
    return [
        ("C[3/2,1/2,1]", c * left32(1j * g.P(l, 1) * np.einsum("k,CB->kCB", v, I2))),
        ("C[3/2,1/2,2]", c * left32(-0.25 * np.einsum(
            "kj,jCB->kCB", g.s0(v, v) * g.P(l, 2) + g.s0(g.a, g.b) * g.P(l, 1), SIGMA))),
    ]


def _th_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = (l1 - l) / (8 * math.pi) * math.sqrt(1.5)
    a, b, v = g.a, g.b, g.v
    return [
        ("C[3/2,1/2,1]", c * left32(np.einsum("k,CB->kCB", b * g.P(l1, 1) - a * g.P(l, 1), I2) + 0j)),
        ("C[3/2,1/2,2]", c * left32(0.25j * np.einsum(
            "kp,pCB->kCB", g.s(b, v) * g.P(l1, 2) - g.s(a, v) * g.P(l, 2), SIGMA))),
    ]


def _ht_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = (l1 - l) / (8 * math.pi) * math.sqrt(1.5)
    a, b, v = g.a, g.b, g.v
    return [
        ("C[1/2,3/2,1]", c * right32(np.einsum("k,AC->kAC", b * g.P(l1, 1) - a * g.P(l, 1), I2) + 0j)),
        ("C[1/2,3/2,2]", c * right32(0.25j * np.einsum(
            "kp,pAC->kAC", g.s(b, v) * g.P(l1, 2) - g.s(a, v) * g.P(l, 2), SIGMA))),
    ]


def _d2_bracket(p, g):
    l, l1, l2 = p["l"], _ls(p), _ls(p, 2)
    a, b = g.a, g.b
    return _paren0(g, b, b) * g.P(l2, 2) - g.s0(b, a) * g.P(l1, 2) + _paren0(g, a, a) * g.P(l, 2)


def _d2_const(p):
    l, l1, j = p["l"], _ls(p), _j(p)
    return (l1 - l) / FOUR_PI * math.sqrt((j + 0.5) / (l1 * (l1 + 1) * (2 * l1 + 1)))


def _th_d2(p, g):
    return _d2_const(p) * left32(np.einsum("kp,pCB->kCB", _d2_bracket(p, g), SIGMA))


def _ht_d2(p, g):
    return -_d2_const(p) * right32(np.einsum("kAC,kp->pAC", SIGMA, _d2_bracket(p, g)))


def _th_local_same_structures(p, g):
    l = p["l"]
    c = -math.sqrt(1.5) * (2 * l + 1) / (64 * math.pi) * l * (l + 1)
    return [("C[3/2,1/2,2]", c * left32(np.einsum("kj,jCB->kCB", g.s0(g.a, g.a), SIGMA)))]


def _th_local_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = math.sqrt(1.5) * (l1 + l + 1) / (16 * math.pi)
    return [("C[3/2,1/2,1]", c * left32(np.einsum("k,CB->kCB", g.a, I2) + 0j))]


def _ht_local_d1_structures(p, g):
    l, l1 = p["l"], _ls(p)
    c = math.sqrt(1.5) * (l1 + l + 1) / (16 * math.pi)
    return [("C[1/2,3/2,1]", c * right32(np.einsum("k,AC->kAC", g.a, I2) + 0j))]


def _d2_local_const(p):
    l, l1, j = p["l"], _ls(p), _j(p)
    return 3 / (16 * math.pi) * (l1 - l) * math.sqrt((j + 0.5) * l1 * (l1 + 1) / (2 * l1 + 1))


def _th_local_d2(p, g):
    return _d2_local_const(p) * left32(np.einsum("kp,pCB->kCB", g.s0(g.a, g.a), SIGMA)) + 0j


def _ht_local_d2(p, g):
    return -_d2_local_const(p) * right32(np.einsum("pAC,pk->kAC", SIGMA, g.s0(g.a, g.a))) + 0j


_spin_theorem("spin13.same-l", "eq:add13half1", 3, 1, 0, _TH_SAME, "j = l +- 1/2",
              structures=_th_same_structures)
_spin_theorem("spin13.delta1", "eq:add13half2", 3, 1, 1, _TH_D1, "l1 = l + dl; j = l +- 1/2",
              structures=_th_d1_structures)
_spin_theorem("spin31.delta1", "eq:add13half2x", 1, 3, 1, _HT_D1, "l1 = l + dl; j = l1 +- 1/2",
              structures=_ht_d1_structures)
_spin_theorem("spin13.delta2", "eq:add13half3", 3, 1, 2, _TH_D2, "l2 = l + 2dl; j = l + dl/2",
              rhs=_th_d2, notes=f"(p q)_0 = {PAREN0} {{p q}}_0")
_spin_theorem("spin31.delta2", "eq:add13half4", 1, 3, 2, _HT_D2, "l2 = l + 2dl; j = l + 3dl/2",
              rhs=_ht_d2, notes=f"(p q)_0 = {PAREN0} {{p q}}_0")
_spin_theorem("spin13.local-same", "eq:add13half-local", 3, 1, 0, _TH_SAME, "b = a, j = l +- 1/2",
              structures=_th_local_same_structures, local=True, parent="spin13.same-l")
_spin_theorem("spin13.local-delta1", "eq:add13half-local", 3, 1, 1, _TH_D1, "b = a, l1 = l + dl",
              structures=_th_local_d1_structures, local=True, parent="spin13.delta1")
_spin_theorem("spin31.local-delta1", "eq:add13half-local", 1, 3, 1, _HT_D1, "b = a, l1 = l + dl",
              structures=_ht_local_d1_structures, local=True, parent="spin31.delta1")
_spin_theorem("spin13.local-delta2", "eq:add13half-local", 3, 1, 2, _TH_D2, "b = a, l2 = l + 2dl",
              rhs=_th_local_d2, local=True, parent="spin13.delta2")
_spin_theorem("spin31.local-delta2", "eq:add13half-local", 1, 3, 2, _HT_D2, "b = a, l2 = l + 2dl",
              rhs=_ht_local_d2, local=True, parent="spin31.delta2")
