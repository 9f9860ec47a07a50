"""
Extracting coefficients
=======================

Some theorems carry coefficients whose closed form is not written out.
Their tensor structures are known, so the coefficients are recovered by a
least-squares fit of the brute-force sum over many direction pairs.
"""
import math

from spinharm.catalog import extract_coefficients, get, recognize_rational, sample_pairs

pairs = sample_pairs(20, seed=42)[:-2]

# spin-1: the scalar coefficient follows a trace rule
spec = get("spin1.same-l")
for p in spec.params(3):
    fit = extract_coefficients(spec, p, pairs)
    c0 = fit.value("C[1,1,0]")
    rule = (2 * p["j"] + 1) / (3 * (2 * p["l"] + 1))
    print(f"{spec.id} {p}  C0={c0:.12f} ~ {recognize_rational(c0)}  trace rule={rule:.12f}  "
          f"residual={fit.residual:.1e}")

# ladder sums: the fitted C_{t,q} are integers t! / (q! (t-2q)! 2^q)
print()
spec = get("ladder.t")
for t in range(1, 5):
    fit = extract_coefficients(spec, {"l": 6, "t": t, "sign": 1}, pairs)
    cells = []
    for label, value in fit.coefficients:
        q = int(label[2:-1].split(",")[1])
        closed = math.factorial(t) // (math.factorial(q) * math.factorial(t - 2 * q) * 2**q)
        cells.append(f"{label}={value:.10f} ({closed})")
    print(f"t={t}: " + "  ".join(cells))
