"""Seeded verification sweep over the registry."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from ..poly import Direction, random_directions
from .extract import ConditioningError, extract_coefficients
from .registry import TheoremSpec, residual, theorems, vanishing_norm

VANISH_TOL = 1e-11
SPREAD_TOL = 1e-8
PRNG = "numpy.random.PCG64"


@dataclass(frozen=True)
class SweepConfig:
    l_max: int = 10
    pairs: int = 20
    seed: int = 42
    tol: float = 1e-9
    filter: str = "*"
    jobs: int = 1
    vanishing: bool = True
    extraction: bool = True


@dataclass(frozen=True)
class CaseResult:
    id: str
    params: dict
    residual: float
    verdict: str
    kind: str = "identity"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


@dataclass
class VerificationReport:
    meta: dict
    cases: list
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            passed = sum(c.passed for c in self.cases)
            self.summary = {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        cases = []
        for c in self.cases:
            rec = asdict(c)
            if not math.isfinite(rec["residual"]):
                rec["residual"] = None  # no finite residual: the case could not be evaluated
            cases.append(rec)
        return {"meta": dict(self.meta), "cases": cases, "summary": dict(self.summary)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False, default=_jsonable) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "kind", "params", "residual", "verdict"])
        for c in self.cases:
            w.writerow([c.id, c.kind, json.dumps(c.params, sort_keys=True), repr(c.residual), c.verdict])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"seed={self.meta['seed']} l_max={self.meta['l_max']} pairs={self.meta['pairs']} tol={self.meta['tol']}"]
        for c in self.cases:
            ps = ",".join(f"{k}={v}" for k, v in c.params.items())
            lines.append(f"{c.verdict.upper():4s} {c.kind:10s} {c.id:32s} {ps:36s} {c.residual:.3e}")
        s = self.summary
        lines.append(f"total={s['total']} passed={s['passed']} failed={s['failed']}")
        return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    raise TypeError(f"not serializable: {type(obj)}")


def sample_pairs(count: int, seed: int) -> list[tuple[Direction, Direction]]:
    """count seeded random pairs, then the local pair (a, a) and the antipodal pair (a, -a)."""
    rng = np.random.default_rng(seed)
    dirs = random_directions(rng, 2 * count + 1)
    pairs = [(dirs[2 * i], dirs[2 * i + 1]) for i in range(count)]
    a = dirs[-1]
    pairs.append((a, a))
    pairs.append((a, a.antipode()))
    return pairs


def _identity_case(spec: TheoremSpec, params: dict, pairs, tol: float) -> CaseResult:
    worst = 0.0
    for a, b in pairs:
        r = residual(spec, params, a, a if spec.local else b)
        worst = max(worst, r) if math.isfinite(r) else math.inf
    return CaseResult(spec.id, params, worst, "pass" if worst < tol else "fail", "identity")


def _vanishing_case(spec: TheoremSpec, params: dict, pairs) -> CaseResult:
    worst = 0.0
    for a, b in pairs:
        worst = max(worst, vanishing_norm(spec, params, a, a if spec.local else b))
    return CaseResult(spec.id, params, worst, "pass" if worst < VANISH_TOL else "fail", "vanishing")


def _extraction_case(spec: TheoremSpec, params: dict, pairs, tol: float) -> CaseResult:
    # the seeded random pairs only: the degenerate local/antipodal pairs add no information
    try:
        fit = extract_coefficients(spec, params, pairs[:-2] if len(pairs) > 3 else pairs)
    except (ConditioningError, ValueError):
        # rank-deficient or under-sampled: the coefficients could not be checked
        return CaseResult(spec.id, params, math.inf, "fail", "extraction")
    ok = fit.residual < tol and fit.spread < SPREAD_TOL
    if spec.expected is not None:
        for label, val in spec.expected(params).items():
            ok = ok and abs(fit.value(label) - val) < tol
    return CaseResult(spec.id, params, fit.residual, "pass" if ok else "fail", "extraction")


def _run_spec(args) -> list[CaseResult]:
    spec_id, config = args
    from .registry import get
    spec = get(spec_id)
    pairs = sample_pairs(config.pairs, config.seed)
    out = []
    for p in spec.params(config.l_max):
        if spec.mode == "explicit":
            out.append(_identity_case(spec, p, pairs, config.tol))
        elif config.extraction:
            out.append(_extraction_case(spec, p, pairs, config.tol))
    if config.vanishing:
        out.extend(_vanishing_case(spec, p, pairs) for p in spec.vanishing_params(config.l_max))
    return out


def sweep(config: SweepConfig = SweepConfig()) -> VerificationReport:
    """Verify every matching theorem for every valid parameter tuple with l <= l_max.

    Cases are ordered by (theorem id, generation order of parameters), independent
    of the number of worker processes.
    """
    from .. import __version__

    specs = theorems(config.filter)
    tasks = [(s.id, config) for s in specs]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_spec, tasks))
    else:
        chunks = [_run_spec(t) for t in tasks]
    cases = [c for chunk in chunks for c in chunk]
    meta = {"seed": config.seed, "l_max": config.l_max, "pairs": config.pairs, "tol": config.tol,
            "version": __version__, "filter": config.filter, "prng": PRNG}
    return VerificationReport(meta=meta, cases=cases)
