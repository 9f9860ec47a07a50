import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from spinharm.tensor import (PAULI, SpinorTensor, antisym_brackets, apply_projector, projector_spinor,
                             projector_tensor, spherical_basis, standard_spinor, standard_tensor,
                             sym_braces, sym_braces_traceless)

Z = np.array([0.0, 0.0, 1.0])
X = np.array([1.0, 0.0, 0.0])
Y = np.array([0.0, 1.0, 0.0])

vec3 = arrays(np.float64, 3, elements=st.floats(-2, 2))


def _traces(arr, n):
    for i, j in itertools.combinations(range(n), 2):
        yield np.trace(arr, axis1=i, axis2=j)


def test_spinortensor_shape_checked():
    with pytest.raises(ValueError):
        SpinorTensor(np.zeros((3, 2)), 2)
    t = SpinorTensor(np.ones((3, 2)), 1, 1)
    assert t.has_spinor and t.size == 6
    with pytest.raises(ValueError):
        t.data[0, 0] = 2
    assert (t * 2 - t).inner(t) == pytest.approx(6)


@pytest.mark.parametrize("n", range(0, 5))
def test_standard_tensor_family(n):
    eps = [standard_tensor(n, m).data for m in range(-n, n + 1)]
    for arr in eps:
        for k in range(n - 1):
            axes = list(range(n))
            axes[k], axes[k + 1] = axes[k + 1], axes[k]
            assert np.max(np.abs(arr - arr.transpose(axes))) < 1e-15
        for tr in _traces(arr, n):
            assert np.max(np.abs(tr)) < 1e-14
    gram = np.array([[np.vdot(a, b) for b in eps] for a in eps])
    assert np.max(np.abs(gram - np.eye(2 * n + 1))) < 1e-13


@pytest.mark.parametrize("n", range(0, 5))
def test_standard_tensor_conjugation(n):
    for m in range(-n, n + 1):
        lhs = standard_tensor(n, m).data.conj()
        rhs = (-1) ** m * standard_tensor(n, -m).data
        assert np.max(np.abs(lhs - rhs)) < 1e-14


def test_standard_tensor_examples():
    e1 = spherical_basis(1).data
    assert np.allclose(standard_tensor(2, 2).data, np.multiply.outer(e1, e1))
    assert np.allclose(spherical_basis(0).data, Z)
    with pytest.raises(ValueError):
        standard_tensor(2, 3)


def test_standard_spinor():
    assert np.array_equal(standard_spinor(0, "1/2").data, [1, 0])
    assert np.array_equal(standard_spinor(0, "-1/2").data, [0, 1])
    with pytest.raises(ValueError):
        standard_spinor(1, "5/2")
    with pytest.raises(ValueError):
        standard_spinor(1, 1)
    chis = [standard_spinor(1, f"{t}/2").data for t in (-3, -1, 1, 3)]
    gram = np.array([[np.vdot(a, b) for b in chis] for a in chis])
    assert np.max(np.abs(gram - np.eye(4))) < 1e-14


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sigma_contraction(n):
    for tsz in range(-(2 * n + 1), 2 * n + 2, 2):
        chi = standard_spinor(n, f"{tsz}/2")
        for k in range(n):
            assert chi.pauli_contract(k).norm_max() < 1e-14


@pytest.mark.parametrize("n", range(1, 5))
def test_projector_tensor(n):
    x = projector_tensor(n).data.reshape(3**n, 3**n)
    assert np.max(np.abs(x @ x - x)) < 1e-13
    assert np.max(np.abs(x - x.conj().T)) < 1e-14
    assert abs(np.trace(x) - (2 * n + 1)) < 1e-12


def test_projector_tensor_examples():
    assert np.allclose(projector_tensor(1).data, np.eye(3))
    rng = np.random.default_rng(0)
    c = rng.normal(size=5) + 1j * rng.normal(size=5)
    t = sum(ci * standard_tensor(2, m).data for ci, m in zip(c, range(-2, 3)))
    assert np.allclose(apply_projector(2, t), t, atol=1e-14)


@pytest.mark.parametrize("n", range(0, 4))
def test_projector_spinor(n):
    d = 2 * 3**n
    x = projector_spinor(n).reshape(d, d)
    assert np.max(np.abs(x @ x - x)) < 1e-13
    assert np.max(np.abs(x - x.conj().T)) < 1e-14
    assert abs(np.trace(x) - (2 * n + 2)) < 1e-12


def test_projector_spinor_kills_spin_half_part():
    # sigma^k chi(s) lies in the spin-1/2 component of rank-1 (x) spinor
    x = projector_spinor(1)
    for chi in ([1, 0], [0, 1], [0.3, 0.7j]):
        t = np.einsum("kab,b->ka", PAULI, np.asarray(chi, dtype=complex))
        assert np.max(np.abs(np.einsum("iAkB,kB->iA", x, t))) < 1e-15


def test_sym_braces_examples():
    a, b = np.array([1.0, 2, 3]), np.array([0.5, -1, 2])
    assert np.allclose(sym_braces([a, b]).data, np.outer(a, b) + np.outer(b, a))
    assert np.allclose(sym_braces([a]).data, a)
    assert np.allclose(sym_braces([Z, Z, Z]).data, 6 * np.multiply.outer(np.multiply.outer(Z, Z), Z))


def test_sym_braces_traceless_examples():
    t = sym_braces_traceless([Z, Z]).data
    assert t[2, 2] == pytest.approx(4 / 3)
    w = 0.7
    v = w * Z
    t4 = sym_braces_traceless([v, v, v, v]).data
    e0 = standard_tensor(4, 0).data
    assert t4[2, 2, 2, 2] == pytest.approx(24 * abs(e0[2, 2, 2, 2]) ** 2 * w**4)


@settings(max_examples=40, deadline=None)
@given(vec3, vec3, vec3)
def test_sym_braces_traceless_properties(a, b, c):
    full = sym_braces([a, b, c]).data
    t = sym_braces_traceless([a, b, c]).data
    for tr in _traces(t, 3):
        assert np.max(np.abs(tr)) < 1e-12
    for perm in itertools.permutations(range(3)):
        assert np.allclose(t, t.transpose(perm), atol=1e-12)
    # the removed part is built from deltas times vectors
    diff = full - t
    scale = max(1.0, np.max(np.abs(full)))
    k = np.einsum("ijj->i", diff) / 5
    recon = (np.einsum("ij,k->ijk", np.eye(3), k) + np.einsum("ik,j->ijk", np.eye(3), k)
             + np.einsum("jk,i->ijk", np.eye(3), k))
    assert np.max(np.abs(diff - recon)) < 1e-12 * scale


def test_antisym_brackets():
    a = np.array([0.3, -1.0, 2.0])
    assert antisym_brackets(a, a).norm_max() == 0
    t = antisym_brackets(X, Y).data
    assert t[0, 1] == 1 and t[1, 0] == -1
    assert abs(np.trace(t)) == 0


def test_permute_and_trace():
    t = SpinorTensor(np.arange(27.0).reshape(3, 3, 3), 3)
    assert np.array_equal(t.permute([2, 0, 1]).data, t.data.transpose(2, 0, 1))
    assert np.array_equal(t.trace(0, 1).data, np.trace(t.data, axis1=0, axis2=1))
    with pytest.raises(ValueError):
        t.permute([0, 1])
    assert math.isclose(abs(spherical_basis(1).inner(spherical_basis(1))), 1.0)
