"""Acceptance gate: nine criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the summary) or
``python3 tests/test_acceptance.py``.
"""
import json
import math
import os
import subprocess
import sys
import tempfile
import time

import numpy as np
import pytest

from spinharm import angular
from spinharm.angular import HalfInt, SurdSum, cg_exact
from spinharm.catalog import SweepConfig, extract_coefficients, get, residual, sample_pairs, sweep, theorems
from spinharm.harmonics import quadrature_grid, spin_harmonic_block
from spinharm.poly import Direction, legendre_p, random_directions, spherical_harmonics_row
from spinharm.tensor import PAULI, projector_spinor, projector_tensor

FOUR_PI = 4 * math.pi
CRITERIA = {
    1: "CG exactness (orthogonality, completeness, j1+j2 <= 6, < 5 s)",
    2: "classic addition theorem, l <= 25, 100 pairs, < 1e-11",
    3: "local sum rules and l_z^2..l_z^8 moments, l <= 15, 50 angles",
    4: "explicit-theorem sweep, l <= 10, 20 pairs + local + antipodal, < 1e-9",
    5: "vanishing domains, brute-force norm < 1e-11",
    6: "harmonic structure suite (Gram, conjugation, sigma, projectors)",
    7: "coefficient extraction (fit, stability, trace rule)",
    8: "swap relation, n+t <= 3, l <= 8, < 1e-10",
    9: "CLI determinism and exit codes",
}


def _halves(j: HalfInt):
    return [HalfInt(t) for t in range(-j.twice, j.twice + 1, 2)]


@pytest.fixture(scope="module")
def canonical_report():
    """The default-config sweep: l_max=10, 20 pairs, seed 42, tol 1e-9."""
    return sweep(SweepConfig(jobs=os.cpu_count() or 1))


# 1 ---------------------------------------------------------------------------------

def test_criterion_1_cg_exactness():
    with angular._cache_lock:
        angular._cache.clear()
    start = time.perf_counter()
    bad = 0
    for t1 in range(13):
        for t2 in range(13 - t1):
            j1, j2 = HalfInt(t1), HalfInt(t2)
            totals = [HalfInt(t) for t in range(abs(t1 - t2), t1 + t2 + 1, 2)]
            for j in totals:
                for jp in totals:
                    for m in _halves(min(j, jp)):
                        acc = SurdSum()
                        for m1 in _halves(j1):
                            if abs((m - m1).twice) <= t2:
                                acc.add(cg_exact(j1, m1, j2, m - m1, j, m) * cg_exact(j1, m1, j2, m - m1, jp, m))
                        bad += not acc.equals_rational(1 if j == jp else 0)
            for m1 in _halves(j1):
                for m2 in _halves(j2):
                    for m1p in _halves(j1):
                        m2p = m1 + m2 - m1p
                        if abs(m2p.twice) > t2:
                            continue
                        acc = SurdSum()
                        for j in totals:
                            if abs((m1 + m2).twice) <= j.twice:
                                acc.add(cg_exact(j1, m1, j2, m2, j, m1 + m2) * cg_exact(j1, m1p, j2, m2p, j, m1 + m2))
                        bad += not acc.equals_rational(1 if m1 == m1p else 0)
    elapsed = time.perf_counter() - start
    assert bad == 0
    assert elapsed < 5.0, elapsed


# 2 ---------------------------------------------------------------------------------

def test_criterion_2_classic_base_case():
    dirs = random_directions(np.random.default_rng(42), 200)
    worst = 0.0
    for a, b in zip(dirs[::2], dirs[1::2]):
        x = float(a.vector @ b.vector)
        for l in range(26):
            lhs = np.sum(spherical_harmonics_row(l, b) * spherical_harmonics_row(l, a).conj())
            worst = max(worst, abs(lhs - (2 * l + 1) / FOUR_PI * legendre_p(l, x)))
    assert worst < 1e-11, worst


# 3 ---------------------------------------------------------------------------------

def test_criterion_3_local_sum_rules():
    rng = np.random.default_rng(42)
    thetas = np.arccos(rng.uniform(-1, 1, 50))
    phis = rng.uniform(0, 2 * math.pi, 50)
    dirs = [Direction(t, p) for t, p in zip(thetas, phis)]
    norm = get("appendix.norm")
    moments = [get(f"appendix.moments.t{k}") for k in (2, 4, 6, 8)]
    for d in dirs:
        for l in range(16):
            assert abs(np.sum(np.abs(spherical_harmonics_row(l, d)) ** 2) - (2 * l + 1) / FOUR_PI) < 1e-12
            assert residual(norm, {"l": l}, d, d) < 1e-12
            for spec in moments:
                assert residual(spec, {"l": l}, d, d) < 1e-10, (spec.id, l)
    # the second moment in its printed form
    d = dirs[0]
    l = 15
    row = spherical_harmonics_row(l, d)
    lhs = np.sum(np.arange(-l, l + 1) ** 2 * np.abs(row) ** 2)
    assert abs(lhs - (2 * l + 1) * l * (l + 1) * math.sin(d.theta) ** 2 / (8 * math.pi)) < 1e-10 * max(1, lhs)


# 4 ---------------------------------------------------------------------------------

def test_criterion_4_explicit_sweep(canonical_report):
    explicit = {t.id for t in theorems() if t.mode == "explicit"}
    assert len(explicit) >= 45
    cases = [c for c in canonical_report.cases if c.kind == "identity"]
    assert {c.id for c in cases} == explicit
    failed = [c for c in cases if not (c.residual < 1e-9)]
    assert not failed, failed[:5]
    assert canonical_report.meta["pairs"] == 20 and canonical_report.meta["l_max"] == 10


# 5 ---------------------------------------------------------------------------------

def test_criterion_5_vanishing(canonical_report):
    cases = [c for c in canonical_report.cases if c.kind == "vanishing"]
    with_domain = {t.id for t in theorems() if t.vanishing_params(10)}
    assert {c.id for c in cases} == with_domain
    failed = [c for c in cases if not (c.residual < 1e-11)]
    assert not failed, failed[:5]
    # the two-unit spin-1 sum is zero for every j outside its validity list
    spec = get("spin1.delta2")
    for a, b in sample_pairs(20, 42):
        for p in ({"l": 3, "dl": 1, "j": 3}, {"l": 3, "dl": 1, "j": 0}, {"l": 4, "dl": -1, "j": 2}):
            assert np.max(np.abs(spec.lhs(p, a, b))) < 1e-11


# 6 ---------------------------------------------------------------------------------

def _js(l, ts):
    return range(abs(2 * l - ts), 2 * l + ts + 1, 2)


def test_criterion_6_harmonic_structure():
    dirs, w = quadrature_grid(6)
    for ts in range(5):
        cols = []
        for l in range(7):
            for tj in _js(l, ts):
                blocks = np.stack([spin_harmonic_block(l, f"{ts}/2", f"{tj}/2", d) for d in dirs])
                cols.append(blocks.reshape(len(dirs), tj + 1, -1))
        f = np.concatenate(cols, axis=1)
        gram = np.einsum("p,pia,pja->ij", w, f.conj(), f)
        assert np.max(np.abs(gram - np.eye(gram.shape[0]))) < 1e-11, ts

    isig2 = 1j * PAULI[1]
    for d in random_directions(np.random.default_rng(6), 50):
        for l in range(5):
            for n in (0, 1, 2):
                for tj in _js(l, 2 * n):
                    j = tj // 2
                    block = spin_harmonic_block(l, n, j, d)
                    for k, jz in enumerate(range(-j, j + 1)):
                        rhs = (-1) ** (jz + l + n - j) * block[2 * j - k]
                        assert np.max(np.abs(block[k].conj() - rhs)) < 1e-12
            for n in (0, 1):
                for tj in _js(l, 2 * n + 1):
                    block = spin_harmonic_block(l, f"{2 * n + 1}/2", f"{tj}/2", d)
                    for k, tjz in enumerate(range(-tj, tj + 1, 2)):
                        lhs = np.einsum("ab,...b->...a", isig2, block[k])
                        phase = (-1) ** ((2 * l + 2 * n + 1 - tj) // 2 + (1 + tjz) // 2)
                        assert np.max(np.abs(lhs - phase * block[tj - k].conj())) < 1e-12
    for d in random_directions(np.random.default_rng(7), 10):
        for l in range(6):
            for tj in _js(l, 3):
                block = spin_harmonic_block(l, "3/2", f"{tj}/2", d)
                assert np.max(np.abs(np.einsum("iab,kib->ka", PAULI, block))) < 1e-12

    for n in range(1, 5):
        x = projector_tensor(n).data.reshape(3**n, 3**n)
        assert np.max(np.abs(x @ x - x)) < 1e-12 and abs(np.trace(x) - (2 * n + 1)) < 1e-12
    for n in range(0, 4):
        x = projector_spinor(n).reshape(2 * 3**n, 2 * 3**n)
        assert np.max(np.abs(x @ x - x)) < 1e-12 and abs(np.trace(x) - (2 * n + 2)) < 1e-12


# 7 ---------------------------------------------------------------------------------

EXTRACTED = ["spin1.same-l", "spin1.delta1", "spin32.same-l", "spin32.delta1", "spin32.delta2",
             "spin13.same-l", "spin13.delta1", "spin31.delta1", "ladder.t"]


def test_criterion_7_extraction():
    pairs = sample_pairs(20, 42)[:-2]
    first, second = pairs[:10], pairs[10:]
    for tid in EXTRACTED:
        spec = get(tid)
        for p in spec.params(8):
            fit = extract_coefficients(spec, p, pairs)
            assert fit.residual < 1e-9, (tid, p)
            a = extract_coefficients(spec, p, first)
            b = extract_coefficients(spec, p, second)
            for (_, va), (_, vb) in zip(a.coefficients, b.coefficients):
                if not (math.isnan(va) or math.isnan(vb)):
                    assert abs(va - vb) < 1e-8, (tid, p)
            if tid in ("spin1.same-l", "spin32.same-l"):
                s = 1 if tid == "spin1.same-l" else 1.5
                label = "C[1,1,0]" if s == 1 else "C[3/2,3/2,0]"
                want = (2 * p["j"] + 1) / ((2 * s + 1) * (2 * p["l"] + 1))
                assert abs(fit.value(label) - want) < 1e-9, (tid, p)
    assert all(p["t"] <= 4 for p in get("ladder.t").params(8))


# 8 ---------------------------------------------------------------------------------

def test_criterion_8_swap_relation():
    spec = get("scaten.swap")
    params = [p for p in spec.params(8) if p["n"] + p["t"] <= 3]
    assert {p["n"] + p["t"] for p in params} >= {1, 2, 3}
    for p in params:
        for a, b in sample_pairs(20, 42):
            assert residual(spec, p, a, b) < 1e-10, p


# 9 ---------------------------------------------------------------------------------

def _cli(*args):
    return subprocess.run([sys.executable, "-m", "spinharm", *args], capture_output=True, text=True, check=False)


def test_criterion_9_cli_determinism():
    from spinharm.cli import strip_timestamp

    with tempfile.TemporaryDirectory() as tmp:
        outs = [os.path.join(tmp, f"run{i}.json") for i in (1, 2)]
        for out in outs:
            proc = _cli("verify", "--lmax", "4", "--pairs", "6", "--seed", "7", "--format", "json", "--out", out)
            assert proc.returncode == 0, proc.stderr
        texts = [open(o, encoding="utf-8").read() for o in outs]
        assert strip_timestamp(texts[0]) == strip_timestamp(texts[1])
        assert json.loads(texts[0])["summary"]["failed"] == 0
    assert _cli("verify", "--filter", "nosuch.*").returncode == 2
    assert _cli("verify", "--lmax", "2", "--pairs", "2", "--filter", "spinhalf.*", "--tol", "1e-300").returncode == 1
    assert _cli("extract", "--theorem", "spinhalf.same-l").returncode == 2
    assert _cli("list", "--filter", "spin32.delta3").returncode == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
