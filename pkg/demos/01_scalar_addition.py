"""
Scalar addition theorems
========================

The classic addition theorem and its l_z-weighted relatives, checked by
summing products of spherical harmonics directly.
"""
import math

import numpy as np

from spinharm import Direction, legendre_p, spherical_harmonics_row
from spinharm.catalog import evaluate_lhs, evaluate_rhs, get

a = Direction(0.4, 1.1)
b = Direction(2.0, -0.7)
x = float(a.vector @ b.vector)

# sum_m Y_lm(b) Y_lm(a)* against (2l+1)/(4 pi) P_l(a.b)
for l in (0, 1, 5, 20):
    lhs = np.sum(spherical_harmonics_row(l, b) * spherical_harmonics_row(l, a).conj())
    rhs = (2 * l + 1) / (4 * math.pi) * legendre_p(l, x)
    print(f"l={l:2d}  sum={lhs.real:+.15f}  closed form={rhs:+.15f}")

# weighting the sum by l_z^k brings in derivatives of P_l and the wedge a x b
print()
for k in range(1, 6):
    spec = get(f"moments.t{k}")
    lhs = complex(evaluate_lhs(spec, {"l": 6}, a, b))
    rhs = complex(evaluate_rhs(spec, {"l": 6}, a, b))
    print(f"{spec.id:11s} {spec.citation:12s} lhs={lhs:.12f}  rhs={rhs:.12f}")
