import math

import numpy as np
import pytest

from spinharm.angular import half
from spinharm.harmonics import (SpinHarmonicLabel, basis_shape, quadrature_grid, quadrature_inner_product,
                                spin_harmonic, spin_harmonic_block)
from spinharm.poly import Direction, random_directions, spherical_harmonic
from spinharm.tensor import PAULI, standard_tensor

FOUR_PI = 4 * math.pi
SPINS = ["0", "1/2", "1", "3/2", "2"]


def _js(l, s):
    s = half(s)
    return range(abs(2 * l - s.twice), 2 * l + s.twice + 1, 2)


def _dirs(n, seed):
    return random_directions(np.random.default_rng(seed), n)


def test_label_validation():
    assert SpinHarmonicLabel(2, 1, 3, -2).is_allowed
    assert not SpinHarmonicLabel(2, 1, 4, 0).is_allowed
    with pytest.raises(ValueError):
        SpinHarmonicLabel(2, "1/2", 2, "1/2")
    with pytest.raises(ValueError):
        SpinHarmonicLabel(-1, 0, 0, 0)


def test_examples():
    d = Direction(1.1, 0.4)
    for m in (-1, 0, 1):
        y = spin_harmonic(SpinHarmonicLabel(0, 1, 1, m), d)
        assert np.allclose(y.data, standard_tensor(1, m).data / math.sqrt(FOUR_PI), atol=1e-15)
    y = spin_harmonic(SpinHarmonicLabel(3, 0, 3, 2), d)
    assert y.rank == 0 and complex(y.data) == pytest.approx(spherical_harmonic(3, 2, d))
    assert spin_harmonic(SpinHarmonicLabel(1, 1, 3, 0), d).norm_max() == 0
    assert spin_harmonic_block(1, "3/2", "9/2", d).shape == (10, 3, 2)


def test_spinhalf_local_sum():
    d = Direction(0.3, 5.0)
    for l in range(5):
        for tj in _js(l, "1/2"):
            block = spin_harmonic_block(l, "1/2", f"{tj}/2", d)
            s = np.einsum("ka,kb->ab", block, block.conj())
            assert np.allclose(s, (tj + 1) / (8 * math.pi) * np.eye(2), atol=1e-14)


def test_quadrature_examples():
    one = quadrature_inner_product(lambda d: spherical_harmonic(0, 0, d), lambda d: spherical_harmonic(0, 0, d), 0)
    assert abs(one - 1) < 1e-14
    z = quadrature_inner_product(lambda d: spherical_harmonic(2, 1, d), lambda d: spherical_harmonic(3, 1, d), 3)
    assert abs(z) < 1e-13
    lab = SpinHarmonicLabel(2, "1/2", "3/2", "1/2")
    f = lambda d: spin_harmonic(lab, d)  # noqa: E731
    assert abs(quadrature_inner_product(f, f, 2) - 1) < 1e-12
    dirs, w = quadrature_grid(4)
    assert len(dirs) == 6 * 11 and w.sum() == pytest.approx(FOUR_PI)


@pytest.mark.parametrize("s", SPINS)
def test_gram_identity(s):
    lmax = 6
    dirs, w = quadrature_grid(lmax)
    cols = []
    for l in range(lmax + 1):
        for tj in _js(l, s):
            blocks = np.stack([spin_harmonic_block(l, s, f"{tj}/2", d) for d in dirs])
            cols.append(blocks.reshape(len(dirs), tj + 1, -1))
    f = np.concatenate(cols, axis=1)  # (points, labels, basis)
    gram = np.einsum("p,pia,pja->ij", w, f.conj(), f)
    assert np.max(np.abs(gram - np.eye(gram.shape[0]))) < 1e-11


@pytest.mark.parametrize("n", [0, 1, 2])
def test_conjugation_integer_spin(n):
    for d in _dirs(50, 10 + n):
        for l in range(5):
            for tj in _js(l, n):
                j = tj // 2
                block = spin_harmonic_block(l, n, j, d)
                for k, jz in enumerate(range(-j, j + 1)):
                    rhs = (-1) ** jz * (-1) ** (l + n - j) * block[2 * j - k]
                    assert np.max(np.abs(block[k].conj() - rhs)) < 1e-12


@pytest.mark.parametrize("n", [0, 1])
def test_conjugation_half_integer_spin(n):
    s = f"{2 * n + 1}/2"
    isig2 = 1j * PAULI[1]
    for d in _dirs(50, 20 + n):
        for l in range(5):
            for tj in _js(l, s):
                block = spin_harmonic_block(l, s, f"{tj}/2", d)
                for k, tjz in enumerate(range(-tj, tj + 1, 2)):
                    lhs = np.einsum("ab,...b->...a", isig2, block[k])
                    phase = (-1) ** ((2 * l + 2 * n + 1 - tj) // 2) * (-1) ** ((1 + tjz) // 2)
                    assert np.max(np.abs(lhs - phase * block[tj - k].conj())) < 1e-12


def test_sigma_traceless():
    for d in _dirs(10, 30):
        for l in range(6):
            for tj in _js(l, "3/2"):
                block = spin_harmonic_block(l, "3/2", f"{tj}/2", d)
                out = np.einsum("iab,kib->ka", PAULI, block)
                assert np.max(np.abs(out)) < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_harmonics_symmetric_traceless(n):
    for d in _dirs(5, 40 + n):
        for l in range(4):
            for tj in _js(l, n):
                block = spin_harmonic_block(l, n, tj // 2, d)
                for y in block:
                    for axes in ([1, 0] + list(range(2, n)),):
                        assert np.max(np.abs(y - y.transpose(axes))) < 1e-12
                    assert np.max(np.abs(np.trace(y, axis1=0, axis2=1))) < 1e-12
                    if n == 3:
                        assert np.max(np.abs(y - y.transpose(0, 2, 1))) < 1e-12


def test_basis_shape():
    assert basis_shape(0) == ()
    assert basis_shape("1/2") == (2,)
    assert basis_shape(2) == (3, 3)
    assert basis_shape("5/2") == (3, 3, 2)
