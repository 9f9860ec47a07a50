"""
Spin-1/2 addition theorems
==========================

Sums of Y^{l 1/2}_{j jz}(b) (x) Y^{l' 1/2}_{j jz}(a)* over jz are 2x2
matrices.  For equal orbital momenta they reduce to Legendre polynomials
times the identity plus a sigma.v term.
"""
import numpy as np

from spinharm import Direction
from spinharm.catalog import evaluate_lhs, evaluate_rhs, get

np.set_printoptions(precision=6, suppress=True)

a = Direction(0.9, 0.2)
b = Direction(1.6, 2.4)

for tid, params in (("spinhalf.same-l", {"l": 3, "j": 3.5}),
                    ("spinhalf.delta1", {"l": 3, "dl": 1, "j": 3.5})):
    spec = get(tid)
    lhs = evaluate_lhs(spec, params, a, b)
    rhs = evaluate_rhs(spec, params, a, b)
    print(f"{tid} {params}  ({spec.citation})")
    print(lhs)
    print("max |lhs - rhs| =", np.max(np.abs(lhs - rhs)))
    print()

# at b = a the same-l sum is (2j+1)/(8 pi) times the identity
spec = get("spinhalf.local-same")
diag = evaluate_rhs(spec, {"l": 3, "j": 3.5}, a, a).real.diagonal()
print(f"{spec.id}: diagonal {diag}, (2j+1)/(8 pi) = {8 / (8 * np.pi):.6f}")
