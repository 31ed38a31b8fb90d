"""Dense complex matrix helpers and a cyclic Jacobi eigensolver for hermitian matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericalFailure, PreconditionError

EPS_SPEC = 1e-10
EPS_UNITARY = 1e-10
MAX_SWEEPS = 100


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def _square(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {a.shape}")
    return a


def max_norm(m) -> float:
    a = np.asarray(m)
    return float(np.max(np.abs(a))) if a.size else 0.0


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T.copy()


def is_hermitian(m, tol: float = EPS_SPEC) -> bool:
    a = _square(m)
    return max_norm(a - a.conj().T) <= tol


def is_unitary(m, tol: float = EPS_UNITARY) -> bool:
    a = _square(m)
    return max_norm(a.conj().T @ a - np.eye(a.shape[0])) <= tol


def commute(a, b, tol: float = EPS_SPEC) -> bool:
    a = _square(a)
    b = _square(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare commutation of {a.shape} and {b.shape}")
    return max_norm(a @ b - b @ a) <= tol


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and the unitary whose columns are eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T

    def residual(self, a) -> float:
        return max_norm(as_matrix(a) - self.reconstruct())


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] in place: strip its phase, then apply a real rotation."""
    apq = a[p, q]
    mag = abs(apq)
    phase = apq / mag
    # diag(1, conj(phase)) on the (p, q) plane makes a[p, q] real and positive
    a[:, q] *= np.conj(phase)
    a[q, :] *= phase
    v[:, q] *= np.conj(phase)

    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0
    a[p, p] = app - t * mag
    a[q, q] = aqq + t * mag

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * vq
    v[:, q] = s * vp + c * vq


def spectral_decompose(m, tol: float = EPS_SPEC, max_sweeps: int = MAX_SWEEPS) -> SpectralDecomposition:
    """Diagonalize a hermitian matrix by cyclic Jacobi sweeps.

    Eigenvalues come back ascending; ties keep their original diagonal order.
    Raises ``PreconditionError`` for non-hermitian input and ``NumericalFailure``
    when ``max_sweeps`` full sweeps do not reduce the off-diagonal mass to
    roundoff level.
    """
    a = _square(m)
    if not is_hermitian(a, tol):
        raise PreconditionError("spectral_decompose requires a hermitian matrix")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)
    threshold = 1e-15 * scale

    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _jacobi_rotate(a, v, p, q)
    else:
        if _offdiag_norm(a) > threshold:
            raise NumericalFailure(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    evals = np.diag(a).real.copy()
    order = np.argsort(evals, kind="stable")
    evals = evals[order]
    vecs = v[:, order]
    evals.setflags(write=False)
    vecs.setflags(write=False)
    return SpectralDecomposition(evals, vecs)
