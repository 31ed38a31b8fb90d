import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_hermitian, random_unitary
from qlab.errors import DimensionError, NumericalFailure, PreconditionError
from qlab.linalg import adjoint, commute, is_hermitian, is_unitary, max_norm, spectral_decompose


def test_adjoint_examples():
    np.testing.assert_array_equal(adjoint([[0, 1], [0, 0]]), [[0, 0], [1, 0]])
    np.testing.assert_array_equal(adjoint([[1j]]), [[-1j]])
    h = np.array([[2, 1 - 1j], [1 + 1j, 0]])
    np.testing.assert_array_equal(adjoint(h), h)


def test_adjoint_is_involution(rng):
    m = rng.normal(size=(3, 5)) + 1j * rng.normal(size=(3, 5))
    np.testing.assert_array_equal(adjoint(adjoint(m)), m)
    assert adjoint(m).shape == (5, 3)


def test_is_hermitian():
    assert is_hermitian(np.diag([-1, -1, 1, 1]))
    assert is_hermitian([[0, 1j], [-1j, 0]])
    assert not is_hermitian([[0, 1], [0, 0]])
    with pytest.raises(DimensionError):
        is_hermitian(np.ones((2, 3)))


def test_is_unitary():
    assert is_unitary(np.eye(4))
    assert is_unitary(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
    assert not is_unitary(np.diag([2, 1]))
    with pytest.raises(DimensionError):
        is_unitary(np.ones((3, 2)))


def test_spectral_diagonal_input():
    dec = spectral_decompose(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_array_equal(dec.eigenvalues, [1, 2, 3])
    u = np.abs(dec.eigenvectors)
    np.testing.assert_array_equal(u, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def test_spectral_swap_matrix():
    dec = spectral_decompose([[0, 1], [1, 0]])
    np.testing.assert_allclose(dec.eigenvalues, [-1, 1], atol=1e-15)
    for col, ref in zip(dec.eigenvectors.T, ([1, -1], [1, 1])):
        ref = np.array(ref) / np.sqrt(2)
        assert abs(abs(np.vdot(ref, col)) - 1) < 1e-14


def test_spectral_random_8x8(rng):
    a = random_hermitian(rng, 8)
    dec = spectral_decompose(a)
    # oracle: multiply back
    u = dec.eigenvectors
    assert max_norm(a - u @ np.diag(dec.eigenvalues) @ u.conj().T) <= 1e-10
    assert np.all(np.diff(dec.eigenvalues) >= 0)


def test_spectral_ties_keep_index_order():
    dec = spectral_decompose(np.diag([2.0, 1.0, 2.0, 1.0]))
    np.testing.assert_array_equal(np.argmax(np.abs(dec.eigenvectors), axis=0), [1, 3, 0, 2])


def test_spectral_rejects_non_hermitian():
    with pytest.raises(PreconditionError):
        spectral_decompose([[0, 1], [0, 0]])


def test_spectral_iteration_cap():
    a = random_hermitian(np.random.default_rng(3), 6)
    with pytest.raises(NumericalFailure):
        spectral_decompose(a, max_sweeps=1)


def test_spectral_degenerate_reconstructs(rng):
    u = random_unitary(rng, 6)
    a = u @ np.diag([1.0, 1.0, 1.0, -2.0, -2.0, 5.0]) @ u.conj().T
    dec = spectral_decompose(a)
    np.testing.assert_allclose(dec.eigenvalues, [-2, -2, 1, 1, 1, 5], atol=1e-12)
    assert dec.residual(a) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_spectral_properties(n, seed):
    rng = np.random.default_rng(seed)
    a = random_hermitian(rng, n, scale=10 ** rng.uniform(-3, 3))
    dec = spectral_decompose(a)
    scale = max(1.0, max_norm(a))
    assert dec.residual(a) <= 1e-10 * scale
    assert is_unitary(dec.eigenvectors, 1e-10)
    assert dec.eigenvalues.dtype == float
    assert abs(np.trace(a).real - dec.eigenvalues.sum()) <= 1e-10 * scale * n


def test_commute_examples(rng):
    assert commute(np.diag(rng.normal(size=4)), np.diag(rng.normal(size=4)))
    assert not commute([[0, 1], [1, 0]], [[1, 0], [0, -1]])
    with pytest.raises(DimensionError):
        commute(np.eye(2), np.eye(3))


def test_commute_shared_unitary(rng):
    t = random_unitary(rng, 5)
    a = t.conj().T @ np.diag(rng.normal(size=5)) @ t
    b = t.conj().T @ np.diag(rng.normal(size=5)) @ t
    assert max_norm(a @ b - b @ a) < 1e-12
    assert commute(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_commute_symmetric(seed):
    rng = np.random.default_rng(seed)
    a, b = random_hermitian(rng, 3), random_hermitian(rng, 3)
    for tol in (0.0, 1e-10, 1e3):
        assert commute(a, b, tol) == commute(b, a, tol)
