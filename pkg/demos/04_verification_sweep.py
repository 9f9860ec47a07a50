"""
A verification sweep
====================

Every registered theorem, every valid parameter tuple, seeded random
direction pairs plus the local and antipodal pairs.  The same run is
available from the command line as ``spinharm verify``.
"""
from collections import Counter

from spinharm.catalog import SweepConfig, sweep, theorems

specs = theorems()
print(f"{len(specs)} theorems:", dict(Counter(t.mode for t in specs)))

report = sweep(SweepConfig(l_max=5, pairs=8, seed=1))
print(report.summary)

worst = {}
for case in report.cases:
    worst[case.kind] = max(worst.get(case.kind, 0.0), case.residual)
for kind, r in sorted(worst.items()):
    print(f"worst {kind:10s} residual {r:.2e}")

for t in specs:
    if t.notes:
        print(f"{t.id}: {t.notes}")
