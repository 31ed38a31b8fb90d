import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_block_isometry, random_signature, random_unitary, random_vector
from qlab.errors import DimensionError, GeometryError, PreconditionError
from qlab.geometry import (
    GeometricSpace,
    Isometry,
    block_unitary_isometry,
    inner,
    is_isometry,
    is_state,
    quadric_norm,
    same_time_slice,
    signed_parts,
)

M4 = GeometricSpace((1, 1, 1, -1))
M5 = GeometricSpace.minkowski(5)
FEYNMAN = np.sqrt([5 / 8, 1 / 8, 3 / 8, 1 / 8])


def test_space_bookkeeping():
    sp = GeometricSpace((1, 1, -1, 0))
    assert (sp.n, sp.r, sp.s) == (4, 2, 3)
    assert GeometricSpace.hilbert(3).is_hilbert
    assert M5.is_minkowski and not GeometricSpace.hilbert(2).is_minkowski


@pytest.mark.parametrize("sig", [(1, -1, 1), (-1, 1), (0, 1), (1, 2), ()])
def test_space_rejects_unsorted_or_bad(sig):
    with pytest.raises(GeometryError):
        GeometricSpace(sig)


def test_inner_examples():
    s = M4.vector(FEYNMAN)
    assert abs(inner(s, s) - 1) < 1e-15
    h = GeometricSpace.hilbert(2)
    assert inner(h.vector([1, 0]), h.vector([0, 1])) == 0
    sp = GeometricSpace((1, 1, -1))
    assert inner(sp.vector([0, 0, 1]), sp.vector([0, 0, 1])) == -1


def test_inner_space_mismatch():
    with pytest.raises(GeometryError):
        inner(M4.vector(FEYNMAN), GeometricSpace.hilbert(4).vector(FEYNMAN))


def test_vector_length_checked():
    with pytest.raises(DimensionError):
        M4.vector([1, 2, 3])


def test_quadric_norm_examples():
    assert abs(quadric_norm(M5.vector(np.full(5, np.sqrt(3) / 3))) - 1) < 1e-15
    assert quadric_norm(M5.vector(np.zeros(5))) == 0


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_quadric_norm_hilbert_is_euclidean(n, seed):
    x = GeometricSpace.hilbert(n).vector(random_vector(np.random.default_rng(seed), n))
    assert quadric_norm(x) == x.hilbert_norm_sq
    assert abs(quadric_norm(x) - np.linalg.norm(x.coords) ** 2) <= 1e-12 * x.hilbert_norm_sq


def test_signed_parts_feynman():
    plus, minus, zero = signed_parts(M4.vector(FEYNMAN))
    np.testing.assert_array_equal(plus.coords, [FEYNMAN[0], FEYNMAN[1], FEYNMAN[2], 0])
    np.testing.assert_array_equal(minus.coords, [0, 0, 0, FEYNMAN[3]])
    np.testing.assert_array_equal(zero.coords, 0)
    assert abs(plus.hilbert_norm_sq - 9 / 8) < 1e-15 and abs(minus.hilbert_norm_sq - 1 / 8) < 1e-15


def test_signed_parts_trivial(rng):
    h = GeometricSpace.hilbert(3)
    x = h.vector(random_vector(rng, 3))
    plus, minus, zero = signed_parts(x)
    np.testing.assert_array_equal(plus.coords, x.coords)
    assert not minus.coords.any() and not zero.coords.any()
    for part in signed_parts(M4.vector(np.zeros(4))):
        assert not part.coords.any()


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_signed_decomposition(n, seed):
    rng = np.random.default_rng(seed)
    sp = random_signature(rng, n, allow_zero=True)
    x = sp.vector(random_vector(rng, n))
    plus, minus, zero = signed_parts(x)
    np.testing.assert_array_equal((plus + minus + zero).coords, x.coords)
    assert abs(quadric_norm(x) - (plus.hilbert_norm_sq - minus.hilbert_norm_sq)) <= 1e-12 * max(1, x.hilbert_norm_sq)


def test_is_state():
    assert is_state(M4.vector(FEYNMAN))
    assert is_state(GeometricSpace.hilbert(2).vector(np.array([1, 1]) / np.sqrt(2)))
    assert not is_state(GeometricSpace((1, 1, -1)).vector([0, 0, 1]))


def test_is_isometry_examples():
    sp = GeometricSpace((1, 1, -1))
    assert is_isometry(np.eye(3), sp)
    a = 0.5
    boost = np.array([[np.cosh(a), np.sinh(a)], [np.sinh(a), np.cosh(a)]])
    assert is_isometry(boost, GeometricSpace((1, -1)))
    swap = np.eye(3)[[2, 1, 0]]
    assert not is_isometry(swap, sp)
    with pytest.raises(GeometryError):
        is_isometry(np.eye(2), sp)


def test_boost_metric_expansion():
    # T^T G T entrywise: [[ch^2 - sh^2, ch sh - sh ch], [., sh^2 - ch^2]]
    for a in (0.5, -1.3, 3.0):
        ch, sh = np.cosh(a), np.sinh(a)
        expected = np.array([[ch * ch - sh * sh, ch * sh - sh * ch], [sh * ch - ch * sh, sh * sh - ch * ch]])
        t = np.array([[ch, sh], [sh, ch]])
        np.testing.assert_allclose(t.T @ np.diag([1, -1]) @ t, expected, atol=1e-12)
        np.testing.assert_allclose(expected, np.diag([1, -1]), atol=1e-10 * ch * ch)


def test_block_unitary_examples():
    sp = GeometricSpace((1, 1, -1))
    np.testing.assert_array_equal(block_unitary_isometry(np.eye(2), np.eye(1), sp).matrix, np.eye(3))
    th = 0.7
    rot = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
    t = block_unitary_isometry(rot, [[1]], sp)
    x = sp.vector([0.3, -2.0, 1.7])
    assert t(x).coords[2] == x.coords[2]
    sp2 = GeometricSpace((1, -1))
    t2 = block_unitary_isometry([[1j]], [[-1j]], sp2)
    np.testing.assert_array_equal(t2.matrix, np.diag([1j, -1j]))
    big_g = np.diag([1.0, -1.0])
    np.testing.assert_allclose(t2.matrix.conj().T @ big_g @ t2.matrix, big_g, atol=0)


def test_block_unitary_rejects():
    sp = GeometricSpace((1, 1, -1))
    with pytest.raises(PreconditionError):
        block_unitary_isometry(np.diag([2, 1]), [[1]], sp)
    with pytest.raises(DimensionError):
        block_unitary_isometry(np.eye(3), [[1]], sp)
    with pytest.raises(GeometryError):
        block_unitary_isometry(np.eye(1), np.eye(1), GeometricSpace((1, -1, 0)))


def test_isometry_constructor_validates():
    with pytest.raises(PreconditionError):
        Isometry(np.diag([2.0, 1.0]), GeometricSpace.hilbert(2))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_isometry_preserves_inner(n, seed):
    rng = np.random.default_rng(seed)
    sp = random_signature(rng, n)
    t = random_block_isometry(rng, sp)
    x, y = sp.vector(random_vector(rng, n)), sp.vector(random_vector(rng, n))
    assert abs(inner(t(x), t(y)) - inner(x, y)) <= 1e-10
    assert is_isometry((t @ random_block_isometry(rng, sp)).matrix, sp)


def test_boost_composition():
    sp = GeometricSpace((1, -1))
    b = lambda a: Isometry([[np.cosh(a), np.sinh(a)], [np.sinh(a), np.cosh(a)]], sp)
    assert is_isometry((b(0.5) @ b(-0.2)).matrix, sp)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1), st.complex_numbers(max_magnitude=1e3, allow_nan=False))
def test_sesquilinear(n, seed, lam):
    rng = np.random.default_rng(seed)
    sp = random_signature(rng, n, allow_zero=True)
    x, y, z = (sp.vector(random_vector(rng, n)) for _ in range(3))
    lhs = inner(x, y + lam * z)
    rhs = inner(x, y) + lam * inner(x, z)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lam)) * 10
    assert inner(y, x) == np.conj(inner(x, y))


def test_same_time_slice():
    s = M5.vector(np.full(5, np.sqrt(3) / 3))
    a = np.diag([-1, 1, 1, 1, 1])
    assert same_time_slice(s, s)
    assert same_time_slice(s, M5.vector(a @ s.coords))
    m3 = GeometricSpace.minkowski(3)
    assert not same_time_slice(m3.vector([0, 0, 1]), m3.vector([0, 0, 2]))
    h = GeometricSpace.hilbert(2)
    with pytest.raises(GeometryError):
        same_time_slice(h.vector([1, 0]), h.vector([1, 0]))


def test_random_unitary_helper(rng):
    from qlab.linalg import is_unitary

    assert is_unitary(random_unitary(rng, 5))
