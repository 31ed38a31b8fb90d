"""Interaction systems and discrete-time Schrödinger/Heisenberg evolutions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, GeometryError, PreconditionError
from .geometry import Isometry, StateVector
from .linalg import EPS_SPEC, as_matrix, is_hermitian

DIVERGENCE_LIMIT = 1e12
DEFAULT_WINDOW = 100
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class InteractionSystem:
    """Real matrix of pairwise interaction coefficients."""

    j: np.ndarray

    def __post_init__(self):
        j = np.array(self.j, dtype=float)
        if j.ndim != 2 or j.shape[0] != j.shape[1]:
            raise DimensionError(f"interaction matrix must be square, got shape {j.shape}")
        j.setflags(write=False)
        object.__setattr__(self, "j", j)

    @property
    def symmetric_part(self) -> np.ndarray:
        return (self.j + self.j.T) / 2

    @property
    def skew_part(self) -> np.ndarray:
        return (self.j - self.j.T) / 2


def hermitian_lift(sys: InteractionSystem | np.ndarray) -> np.ndarray:
    """``J0 + i J1`` for the symmetric/skew split ``J = J0 + J1``."""
    if not isinstance(sys, InteractionSystem):
        sys = InteractionSystem(sys)
    return sys.symmetric_part + 1j * sys.skew_part


def lower_hermitian(a) -> InteractionSystem:
    """Inverse of ``hermitian_lift``: real part plus imaginary part."""
    a = as_matrix(a)
    if not is_hermitian(a, 0.0):
        raise PreconditionError("only hermitian matrices correspond to interaction systems")
    return InteractionSystem(a.real + a.imag)


def interaction_value(a, x) -> float:
    """Total interaction ``x* A x`` for intensity vector ``x``."""
    a = as_matrix(a)
    if not is_hermitian(a, EPS_SPEC):
        raise PreconditionError("interaction value needs a hermitian matrix")
    x = x.coords if isinstance(x, StateVector) else np.asarray(x, dtype=complex)
    if a.shape[0] != x.shape[0]:
        raise DimensionError(f"matrix of size {a.shape[0]} and vector of length {x.shape[0]}")
    value = complex(np.conj(x) @ a @ x)
    assert abs(value.imag) <= 1e-12 * max(1.0, float(np.sum(np.abs(a))) * float(np.sum(np.abs(x) ** 2)))
    return value.real


def cesaro_means(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    return np.cumsum(v) / np.arange(1, v.size + 1)


def cesaro_converged(values, window: int = DEFAULT_WINDOW, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Windowed test: the last ``window`` running means must lie within ``tol`` of each other."""
    v = np.asarray(values, dtype=float)
    if window < 1 or v.size < 2 * window:
        raise PreconditionError(f"need at least {2 * window} values for a window of {window}, got {v.size}")
    means = cesaro_means(v)
    tail = means[-window:]
    if not np.all(np.isfinite(tail)):
        return False, float(means[-1])
    return bool(tail.max() - tail.min() <= tol), float(means[-1])


@dataclass(frozen=True)
class EvolutionTrace:
    values: np.ndarray
    cesaro: np.ndarray
    converged: bool
    limit_estimate: float
    diverged: bool = False
    heisenberg_residual: float | None = None


def evolve(
    a,
    t: Isometry,
    x: StateVector,
    steps: int,
    window: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOL,
    heisenberg_check: bool = False,
) -> EvolutionTrace:
    """Values ``phi_t = (T^t x)* A (T^t x)`` for ``t = 0..steps`` (Schrödinger picture).

    With ``heisenberg_check`` the observable is also evolved as ``A_{t+1} = T* A_t T``
    and the largest per-step disagreement is recorded.  Iteration stops early,
    flagged as diverged, once the Hilbert norm of ``T^t x`` exceeds 1e12.
    """
    a = as_matrix(a)
    if not is_hermitian(a, EPS_SPEC):
        raise PreconditionError("evolve needs a hermitian observable")
    if x.space != t.space:
        raise GeometryError("state and isometry belong to different spaces")
    if a.shape[0] != x.space.n:
        raise DimensionError(f"observable of size {a.shape[0]} on a space of dimension {x.space.n}")
    tm = t.matrix
    tm_adj = tm.conj().T
    xt = x.coords.copy()
    at = a.copy()
    values = []
    residual = 0.0 if heisenberg_check else None
    diverged = False
    for step in range(steps + 1):
        if np.linalg.norm(xt) > DIVERGENCE_LIMIT:
            diverged = True
            break
        phi = complex(np.conj(xt) @ a @ xt).real
        values.append(phi)
        if heisenberg_check:
            psi = complex(np.conj(x.coords) @ at @ x.coords).real
            residual = max(residual, abs(psi - phi))
            at = tm_adj @ at @ tm
        xt = tm @ xt
    values = np.array(values)
    means = cesaro_means(values)
    if diverged:
        converged, limit = False, float(means[-1])
    else:
        converged, limit = cesaro_converged(values, window, tol)
    values.setflags(write=False)
    means.setflags(write=False)
    return EvolutionTrace(values, means, converged, limit, diverged, residual)
