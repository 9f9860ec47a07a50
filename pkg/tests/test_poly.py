import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinharm.harmonics import quadrature_inner_product
from spinharm.poly import (Direction, dot_and_wedge, legendre_derivs, legendre_p, legendre_p_deriv,
                           random_directions, spherical_harmonic, spherical_harmonics_row)

FOUR_PI = 4 * math.pi


def test_direction_roundtrip():
    rng = np.random.default_rng(0)
    for d in random_directions(rng, 50):
        assert abs(np.linalg.norm(d.vector) - 1) < 1e-15
        e = Direction.from_vector(d.vector)
        assert np.allclose(e.vector, d.vector, atol=1e-12)
        assert np.allclose(d.antipode().vector, -d.vector, atol=1e-15)
    with pytest.raises(ValueError):
        Direction(4.0, 0.0)


def test_harmonic_examples():
    d = Direction(0.7, 1.3)
    assert spherical_harmonic(0, 0, d) == pytest.approx(1 / math.sqrt(FOUR_PI), abs=1e-15)
    assert spherical_harmonic(1, 0, Direction(0.0, 0.0)).real == pytest.approx(0.4886025119, abs=1e-10)
    y11 = spherical_harmonic(1, 1, Direction(math.pi / 2, 0.0))
    assert y11.real == pytest.approx(-0.3454941495, abs=1e-10)
    assert abs(y11.imag) < 1e-15
    assert spherical_harmonic(2, 3, d) == 0


def test_harmonics_against_scipy():
    special = pytest.importorskip("scipy.special")
    if not hasattr(special, "sph_harm_y"):
        pytest.skip("scipy too old")
    rng = np.random.default_rng(1)
    for d in random_directions(rng, 10):
        for l in range(0, 12):
            row = spherical_harmonics_row(l, d)
            ref = [special.sph_harm_y(l, m, d.theta, d.phi) for m in range(-l, l + 1)]
            assert np.max(np.abs(row - np.array(ref))) < 1e-12


def test_row_is_read_only():
    row = spherical_harmonics_row(3, Direction(0.3, 0.2))
    with pytest.raises(ValueError):
        row[0] = 1.0


def test_dot_and_wedge():
    z, xh = Direction(0.0, 0.0), Direction(math.pi / 2, 0.0)
    x, v = dot_and_wedge(z, z)
    assert x == 1.0 and np.allclose(v, 0)
    x, v = dot_and_wedge(z, xh)
    assert abs(x) < 1e-15 and np.allclose(v, [0, 1, 0], atol=1e-15)
    x, _ = dot_and_wedge(z, Direction(0.9, 0.0))
    assert x == pytest.approx(math.cos(0.9), abs=1e-15)
    rng = np.random.default_rng(2)
    ds = random_directions(rng, 20)
    for a, b in zip(ds[::2], ds[1::2]):
        x, v = dot_and_wedge(a, b)
        assert abs(v @ v - (1 - x * x)) < 1e-14


def test_orientation_calibration():
    # l_z-weighted bilocal sum at l = 1 fixes the sign of v: the z component of
    # sum m Y_1m(b) Y_1m(a)* is i (3/4pi) v^3 P_1' with v = a x b
    a, b = Direction(0.4, 0.1), Direction(1.2, 2.0)
    lhs = sum(m * spherical_harmonic(1, m, b) * spherical_harmonic(1, m, a).conjugate() for m in (-1, 0, 1))
    _, v = dot_and_wedge(a, b)
    assert abs(lhs - 1j * 3 / FOUR_PI * v[2]) < 1e-15


@settings(max_examples=50, deadline=None)
@given(st.floats(-1, 1))
def test_legendre_ode(x):
    table = legendre_derivs(40, 2, x)
    for l in range(41):
        p, dp, ddp = table[0, l], table[1, l], table[2, l]
        assert abs((1 - x * x) * ddp - 2 * x * dp + l * (l + 1) * p) <= 1e-10 * max(1, l * l)


def test_legendre_ode_random_points():
    rng = np.random.default_rng(3)
    xs = rng.uniform(-1, 1, 100)
    table = legendre_derivs(40, 2, xs)
    l = np.arange(41)[:, None]
    res = (1 - xs**2) * table[2] - 2 * xs * table[1] + l * (l + 1) * table[0]
    assert np.all(np.abs(res) <= 1e-10 * np.maximum(1, l**2))


def test_legendre_against_numpy():
    xs = np.linspace(-1, 1, 21)
    for l in range(15):
        coef = np.zeros(l + 1)
        coef[l] = 1
        series = np.polynomial.Legendre(coef)
        for k in range(6):
            assert np.allclose(legendre_p_deriv(l, k, xs), series.deriv(k)(xs) if k else series(xs),
                               atol=1e-9, rtol=1e-12)


def test_deriv_zero_is_p():
    for x in (-1.0, -0.3, 0.0, 0.77, 1.0):
        for l in range(20):
            assert legendre_p_deriv(l, 0, x) == legendre_p(l, x)
    assert legendre_p_deriv(3, 4, 0.2) == 0.0


def test_clamp():
    assert legendre_p(5, 1 + 5e-13) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        legendre_p(2, 1.01)


def test_classic_addition_theorem():
    rng = np.random.default_rng(4)
    ds = random_directions(rng, 200)
    for a, b in zip(ds[::2], ds[1::2]):
        x, _ = dot_and_wedge(a, b)
        for l in range(26):
            lhs = np.sum(spherical_harmonics_row(l, b) * spherical_harmonics_row(l, a).conj())
            assert abs(lhs - (2 * l + 1) / FOUR_PI * legendre_p(l, x)) < 1e-11


def test_orthonormality_quadrature():
    lmax = 5
    labels = [(l, m) for l in range(lmax + 1) for m in range(-l, l + 1)]
    gram = np.array([[quadrature_inner_product(lambda d, l=l, m=m: spherical_harmonic(l, m, d),
                                               lambda d, k=k, n=n: spherical_harmonic(k, n, d), lmax)
                      for (k, n) in labels] for (l, m) in labels])
    assert np.max(np.abs(gram - np.eye(len(labels)))) < 1e-12
