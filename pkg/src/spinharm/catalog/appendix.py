"""Local sums of two scalar spherical harmonics at one direction (theta, phi).

Each entry is sum_{lz} w(lz) Y_{l', lz + shift}(a) conj(Y_{l lz}(a)) with
l' = l + 1 (or l' = l + 1 paired with l - 1) and a closed form in theta
and phi.  Identities stated only for l' = l + 1 also get an l' = l - 1
companion obtained by complex conjugation and relabelling.
"""
from __future__ import annotations

import cmath
import math

from .geometry import FOUR_PI
from .registry import TheoremSpec, register
from .scalar import _ff, _sqrt
from .sums import scalar_sum

SIGNS = (1, -1)


def _angles(g):
    return g.da.theta, g.da.phi


# -- normalization and l_z moments ---------------------------------------------------

register(TheoremSpec(
    id="appendix.norm",
    family="appendix",
    citation="eq:mix6 (n=t=0)",
    domain="b = a, l >= 0",
    lhs=lambda p, a, b: scalar_sum(p["l"], p["l"], 0, None, a, b),
    rhs=lambda p, g: (2 * p["l"] + 1) / FOUR_PI + 0j,
    valid=lambda L: ({"l": l} for l in range(L + 1)),
    local=True,
    parent="scalar.classic",
))


def _m2(l, th):
    return (2 * l + 1) * l * (l + 1) * math.sin(th) ** 2 / (8 * math.pi)


def _m4(l, th):
    s2 = math.sin(th) ** 2
    return (2 * l + 1) * l * (l + 1) * s2 / (8 * math.pi) * (0.75 * (l * (l + 1) - 2) * s2 + 1)


def _m6(l, th):
    ll = l * (l + 1)
    inner = (5 * _ff(l + 3, 6) / ll * math.cos(4 * th) if ll else 0.0) \
        - 20 * _ff(l + 2, 4) * math.cos(2 * th) + 15 * ll**2 + 4
    return (2 * l + 1) * ll * math.sin(th) ** 2 / (2**9 * math.pi) * inner


def _m8(l, th):
    ll = l * (l + 1)
    inner = (
        -_ff(l + 4, 8) * math.cos(6 * th)
        + 2 * _ff(l + 3, 6) * (3 * ll - 4) * math.cos(4 * th)
        - _ff(l + 2, 4) * (75 * ll**2 - 70 * ll + 24) * math.cos(2 * th) / 5
        + 2 / 35 * ll * (175 * ll**3 - 140 * ll**2 + 84 * ll + 16)
    )
    return 35 / (2**14 * math.pi) * (2 * l + 1) * math.sin(th) ** 2 * inner


for _k, _f, _tag, _parent in ((2, _m2, "b", "moments.t2"), (4, _m4, "c", "moments.t4"),
                              (6, _m6, "d", None), (8, _m8, "e", None)):
    register(TheoremSpec(
        id=f"appendix.moments.t{_k}",
        family="appendix",
        citation=f"eq:momres2{_tag}",
        domain="b = a, l >= 0",
        lhs=(lambda k: lambda p, a, b: scalar_sum(p["l"], p["l"], 0, lambda lz: float(lz) ** k, a, b))(_k),
        rhs=(lambda f: lambda p, g: f(p["l"], g.da.theta) + 0j)(_f),
        valid=lambda L: ({"l": l} for l in range(L + 1)),
        local=True,
        parent=_parent,
    ))


# -- ladder sums with t even --------------------------------------------------------------

def _ladder_w(l, t, sgn):
    return lambda lz: _sqrt(_ff(l - sgn * lz, t) * _ff(l + sgn * lz + t, t))


def _ladder_scale(p):
    """max|w| (2l+1)/(4 pi): by Cauchy-Schwarz no sum of this shape can exceed it."""
    l, t, sgn = p["l"], p["t"], p["sign"]
    w = _ladder_w(l, t, sgn)
    return max(w(lz) for lz in range(-l, l + 1)) * (2 * l + 1) / FOUR_PI


def _rp3(p, g):
    l, t, sgn = p["l"], p["t"], p["sign"]
    th, ph = _angles(g)
    h = t // 2
    c = (-1) ** h / FOUR_PI * math.prod(range(t - 1, 0, -2)) / (2**h * math.factorial(h))
    return c * (2 * l + 1) * _ff(l + h, t) * math.sin(th) ** t * cmath.exp(1j * sgn * t * ph)


register(TheoremSpec(
    id="appendix.ladder",
    family="appendix",
    citation="eq:rp=r.3",
    domain="b = a, l >= 0, t in {2, 4, 6, 8}, sign = +-1; odd t vanishes",
    lhs=lambda p, a, b: scalar_sum(p["l"], p["l"], p["sign"] * p["t"], _ladder_w(p["l"], p["t"], p["sign"]), a, b),
    rhs=_rp3,
    valid=lambda L: ({"l": l, "t": t, "sign": s} for l in range(L + 1) for t in (2, 4, 6, 8) for s in SIGNS),
    vanishing=lambda L: ({"l": l, "t": t, "sign": s} for l in range(L + 1) for t in (1, 3, 5, 7) for s in SIGNS),
    local=True,
    scale=_ladder_scale,
))


# -- shifted local sums ----------------------------------------------------------------------
#
# Each row: id, citation, n (1: Y_{l+1} Y_l*, 2: Y_{l+1} Y_{l-1}*), shift per unit m,
# whether m = +-1 is a parameter, weight(l, m) -> w(lz), rhs(l, m, theta, phi), parent.

def _root(l, n):
    return math.sqrt((2 * l + 1) * (2 * l + 3)) if n == 1 else math.sqrt((2 * l - 1) * (2 * l + 3))


def _e(m, ph):
    return cmath.exp(1j * m * ph)


def _w9a(l, m):
    return lambda lz: _sqrt((l + 1) ** 2 - lz * lz)


def _w9b(l, m):
    return lambda lz: _sqrt((l + 1 + m * lz) * (l + 2 + m * lz))


def _wa_a(l, m):
    return lambda lz: _sqrt((l * l - lz * lz) * ((l + 1) ** 2 - lz * lz))


def _wa_b(l, m):
    return lambda lz: _sqrt((l * l - lz * lz) * (l + m * lz + 1) * (l + m * lz + 2))


def _wa_c(l, m):
    return lambda lz: _sqrt(_ff(l + m * lz + 3, 4))


def _times(k, wf):
    return lambda l, m: (lambda w: (lambda lz: float(lz) ** k * w(lz)))(wf(l, m))


_ROWS = [
    ("appendix.shift.n1.m0", "eq:rmat9a", 1, 0, False, _w9a,
     lambda l, m, th, ph: _root(l, 1) * (l + 1) * math.cos(th) / FOUR_PI,
     "shift.n1.m0", lambda p: {"l": p["l"], "dl": 1}, True),
    ("appendix.shift.n1.m1", "eq:rmat9b", 1, 1, True, _w9b,
     lambda l, m, th, ph: -m / FOUR_PI * _root(l, 1) * (l + 1) * math.sin(th) * _e(m, ph),
     "shift.n1.m1", lambda p: {"l": p["l"], "dl": 1, "m": p["m"]}, True),
    ("appendix.shift.n2.m0", "eq:rmataa", 2, 0, False, _wa_a,
     lambda l, m, th, ph: _root(l, 2) * l * (l + 1) * (3 * math.cos(th) ** 2 - 1) / (8 * math.pi),
     "shift.n2.m0", lambda p: {"l": p["l"]}, False),
    ("appendix.shift.n2.m1", "eq:rmatab", 2, 1, True, _wa_b,
     lambda l, m, th, ph: -3 / (8 * math.pi) * _root(l, 2) * l * (l + 1) * m * math.cos(th) * math.sin(th) * _e(m, ph),
     "shift.n2.m1", lambda p: {"l": p["l"], "m": p["m"]}, False),
    ("appendix.shift.n2.m2", "eq:rmatac", 2, 2, True, _wa_c,
     lambda l, m, th, ph: 3 / (8 * math.pi) * _root(l, 2) * l * (l + 1) * math.sin(th) ** 2 * _e(2 * m, ph),
     "shift.n2.m2", lambda p: {"l": p["l"], "m": p["m"]}, False),
    ("appendix.mixed.n1t1.m1", "eq:mix7", 1, 1, True, _times(1, _w9b),
     lambda l, m, th, ph: -1 / (8 * math.pi) * _root(l, 1) * l * (l + 1) * math.sin(th) * _e(m, ph),
     "mixed.n1t1.m1", lambda p: {"l": p["l"], "dl": 1, "m": p["m"]}, True),
    ("appendix.mixed.n1t2.m1", "eq:mix8a", 1, 1, True, _times(2, _w9b),
     lambda l, m, th, ph: m / (32 * math.pi) * _root(l, 1) * l * (l + 1) * (
         (l + 2) * math.sin(3 * th) - (3 * l + 2) * math.sin(th)) * _e(m, ph),
     None, None, True),
    ("appendix.mixed.n1t2.m0", "eq:mix8b", 1, 0, False, _times(2, _w9a),
     lambda l, m, th, ph: _root(l, 1) * _ff(l + 2, 3) * math.cos(th) * math.sin(th) ** 2 / (8 * math.pi),
     "mixed.n1t2.m0", lambda p: {"l": p["l"], "dl": 1}, True),
    ("appendix.mixed.n2t1.m1", "eq:mix9a", 2, 1, True, _times(1, _wa_b),
     lambda l, m, th, ph: -1 / (8 * math.pi) * _root(l, 2) * _ff(l + 1, 3) * math.cos(th) * math.sin(th) * _e(m, ph),
     None, None, False),
    ("appendix.mixed.n2t1.m2", "eq:mix9b", 2, 2, True, _times(1, _wa_c),
     lambda l, m, th, ph: m / FOUR_PI * _root(l, 2) * _ff(l + 1, 3) * math.sin(th) ** 2 * _e(2 * m, ph),
     None, None, False),
    ("appendix.mixed.n2t2.m0", "eq:mixaa", 2, 0, False, _times(2, _wa_a),
     lambda l, m, th, ph: _root(l, 2) * _ff(l + 2, 4) * math.sin(th) ** 2 * (5 * math.cos(2 * th) + 3) / (64 * math.pi),
     None, None, False),
    ("appendix.mixed.n2t2.m1", "eq:mixa (second line)", 2, 1, True, _times(2, _wa_b),
     lambda l, m, th, ph: m / (32 * math.pi) * _root(l, 2) * _ff(l + 1, 3) * math.cos(th) * math.sin(th) * (
         5 * (l + 2) * math.cos(th) ** 2 - 5 * l - 6) * _e(m, ph),
     None, None, False),
    ("appendix.mixed.n2t2.m2", "eq:mixa (third line)", 2, 2, True, _times(2, _wa_c),
     lambda l, m, th, ph: -1 / (32 * math.pi) * _root(l, 2) * _ff(l + 1, 3) * math.sin(th) ** 2 * (
         5 * (l + 2) * math.cos(th) ** 2 - 7 * l + 2) * _e(2 * m, ph),
     None, None, False),
]


def _params(has_m, lmin):
    def gen(L):
        for l in range(lmin, L + 1):
            for m in (SIGNS if has_m else (0,)):
                yield {"l": l, "m": m} if has_m else {"l": l}
    return gen


_FACTORIAL_NOTE = "(l+1)!/(l-1)! read as (l+1)!/(l-2)!"
_NOTED = {"eq:mix9a", "eq:mix9b", "eq:mixa (second line)", "eq:mixa (third line)"}


def _register_row(tid, citation, n, k, has_m, wf, f, parent, parent_params):
    def lhs(p, a, b):
        l, m = p["l"], p.get("m", 0)
        lo = l if n == 1 else l - 1
        return scalar_sum(l + 1, lo, k * m, wf(l, m), a, b)

    def rhs(p, g):
        return complex(f(p["l"], p.get("m", 0), *_angles(g)))

    register(TheoremSpec(
        id=tid, family="appendix", citation=citation,
        domain="b = a, " + ("l >= 0, Y_{l+1} Y_l*" if n == 1 else "l >= 1, Y_{l+1} Y_{l-1}*")
        + (", m = +-1" if has_m else ""),
        lhs=lhs, rhs=rhs, valid=_params(has_m, 0 if n == 1 else 1), local=True,
        parent=parent, parent_params=parent_params,
        notes=_FACTORIAL_NOTE if citation in _NOTED else "",
    ))


def _register_relabel(tid, citation, k, has_m, wf, f):
    """Y_{l-1} Y_l* companion: conjugate the l' = l + 1 form at (l - 1, -m)."""
    def lhs(p, a, b):
        l, m = p["l"], p.get("m", 0)
        w = wf(l - 1, -m)
        return scalar_sum(l - 1, l, k * m, lambda lz: w(lz + k * m), a, b)

    def rhs(p, g):
        return complex(f(p["l"] - 1, -p.get("m", 0), *_angles(g))).conjugate()

    register(TheoremSpec(
        id=tid + ".down", family="appendix", citation=citation,
        domain="b = a, l >= 1, Y_{l-1} Y_l*" + (", m = +-1" if has_m else ""),
        lhs=lhs, rhs=rhs, valid=_params(has_m, 1), local=True,
        derived="relabel l' = l - 1",
    ))


for _row in _ROWS:
    _tid, _cit, _n, _k, _has_m, _wf, _f, _par, _pp, _down = _row
    _register_row(_tid, _cit, _n, _k, _has_m, _wf, _f, _par, _pp)
    if _down:
        _register_relabel(_tid, _cit, _k, _has_m, _wf, _f)
