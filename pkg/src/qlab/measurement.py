"""Heisenberg measuring instruments and their signed densities.

An instrument is a real eigenvalue matrix ``W`` (n rows, k observables) plus an
isometry ``T``.  Measuring a state ``x`` groups the coordinates of ``Tx`` by the
distinct rows of ``W``; each group carries the weight ``sum g_i |(Tx)_i|^2``.
The weights form a signed density that sums to the quadric norm of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, PreconditionError, UnsupportedGeometryError
from .geometry import GeometricSpace, Isometry, StateVector
from .linalg import EPS_SPEC, commute, is_hermitian

EPS_PSD = 1e-12


def eigenvalue_matrix(w, n: int | None = None) -> np.ndarray:
    """Validate and freeze an n x k real eigenvalue matrix."""
    a = np.array(w, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionError(f"eigenvalue matrix must be 2-d, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise PreconditionError("eigenvalue matrix entries must be finite")
    if n is not None and a.shape[0] != n:
        raise DimensionError(f"eigenvalue matrix has {a.shape[0]} rows, space has dimension {n}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SignedDensity:
    """Finite signed measure on outcome tuples."""

    support: tuple[tuple[float, ...], ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.support) != len(self.weights):
            raise DimensionError("support and weights differ in length")

    def __len__(self):
        return len(self.support)

    def __getitem__(self, outcome) -> float:
        key = tuple(float(v) for v in np.atleast_1d(outcome))
        for v, wt in zip(self.support, self.weights):
            if v == key:
                return wt
        return 0.0

    def items(self):
        return zip(self.support, self.weights)

    def as_dict(self) -> dict:
        return dict(self.items())

    @property
    def k(self) -> int:
        return len(self.support[0]) if self.support else 0

    @property
    def total(self) -> float:
        return float(sum(self.weights))

    def is_nonnegative(self, tol: float = EPS_PSD) -> bool:
        return all(wt >= -tol for wt in self.weights)

    def mean(self) -> np.ndarray:
        if not self.support:
            return np.zeros(0)
        return np.asarray(self.weights) @ np.asarray(self.support)


def eigen_groups(x: StateVector, w, tol: float = 0.0) -> dict[tuple[float, ...], list[int]]:
    """Partition row indices of ``w`` by equal rows, in order of first appearance.

    Rows within ``tol`` (max-abs distance) of a group's label join that group.
    """
    w = eigenvalue_matrix(w, x.space.n)
    groups: dict[tuple[float, ...], list[int]] = {}
    for i, row in enumerate(w):
        key = tuple(float(v) for v in row)
        if tol > 0:
            for label in groups:
                if max(abs(a - b) for a, b in zip(label, key)) <= tol:
                    key = label
                    break
        groups.setdefault(key, []).append(i)
    return groups


def group_projection(x: StateVector, indices) -> StateVector:
    coords = np.zeros_like(x.coords)
    idx = list(indices)
    coords[idx] = x.coords[idx]
    return StateVector(coords, x.space)


def _require_nondegenerate(space: GeometricSpace) -> None:
    if space.s != space.n:
        raise UnsupportedGeometryError(f"densities need a signature without zero entries, got {space}")


def density(x: StateVector, w, tol: float = 0.0) -> SignedDensity:
    """Signed density of ``x`` relative to the eigenvalue matrix ``w``."""
    _require_nondegenerate(x.space)
    g = x.space.g
    mass = g * np.abs(x.coords) ** 2
    groups = eigen_groups(x, w, tol)
    support = tuple(groups)
    weights = tuple(float(np.sum(mass[idx])) for idx in groups.values())
    return SignedDensity(support, weights)


def marginal(d: SignedDensity, j: int) -> SignedDensity:
    """Aggregate a joint density onto its ``j``-th outcome coordinate."""
    if not 0 <= j < d.k:
        raise IndexError(f"column {j} out of range for outcomes of length {d.k}")
    acc: dict[tuple[float], float] = {}
    for v, wt in d.items():
        acc[(v[j],)] = acc.get((v[j],), 0.0) + wt
    return SignedDensity(tuple(acc), tuple(acc.values()))


class Instrument:
    """Heisenberg measuring instrument H(W, T)."""

    __slots__ = ("w", "t")

    def __init__(self, w, t: Isometry | GeometricSpace):
        if isinstance(t, GeometricSpace):
            t = Isometry.identity(t)
        self.w = eigenvalue_matrix(w, t.space.n)
        self.t = t

    def __repr__(self):
        return f"Instrument(w={self.w.tolist()}, space={self.space})"

    @property
    def space(self) -> GeometricSpace:
        return self.t.space

    @property
    def k(self) -> int:
        return self.w.shape[1]

    def column(self, j: int) -> Instrument:
        return Instrument(self.w[:, [j]], self.t)

    def density(self, x: StateVector, tol: float = 0.0) -> SignedDensity:
        return density(self.t(x), self.w, tol)


def measure(inst: Instrument, x: StateVector) -> np.ndarray:
    """Measured k-vector: the first moment of the signed density of ``Tx``."""
    return inst.density(x).mean()


def observable_matrix(inst: Instrument, j: int) -> np.ndarray:
    """Hermitian matrix ``T* G diag(W[:, j]) T`` whose plain quadratic form gives ``measure(...)[j]``.

    In a Hilbert space ``G`` is the identity and this is ``T* diag(W[:, j]) T``.
    """
    if not 0 <= j < inst.k:
        raise IndexError(f"column {j} out of range for k = {inst.k}")
    t = inst.t.matrix
    lam = inst.space.g * inst.w[:, j]
    return t.conj().T @ (lam[:, None] * t)


def jointly_observable_hilbert(matrices, tol: float = EPS_SPEC) -> bool:
    """Pairwise commutation test for a set of hermitian matrices."""
    mats = [np.asarray(m, dtype=complex) for m in matrices]
    for m in mats:
        if not is_hermitian(m, tol):
            raise PreconditionError("joint observability is defined for hermitian matrices")
    return all(commute(a, b, tol) for i, a in enumerate(mats) for b in mats[i + 1 :])


def is_psd_in_state(inst: Instrument, x: StateVector, tol: float = EPS_PSD) -> bool:
    return inst.density(x).is_nonnegative(tol)


def marginal_psd(inst: Instrument, x: StateVector, tol: float = EPS_PSD) -> list[bool]:
    """Per-column nonnegativity of the marginal densities."""
    joint = inst.density(x)
    return [marginal(joint, j).is_nonnegative(tol) for j in range(inst.k)]


@dataclass(frozen=True)
class Reinterpretation:
    """State-dependent eigenvalue matrix and classical probabilities reproducing a measurement."""

    w_x: np.ndarray
    p: np.ndarray

    def expectation(self) -> np.ndarray:
        return self.p @ self.w_x


def reinterpret(w, x: StateVector) -> Reinterpretation:
    """Rescale rows of ``w`` by ``+-||x||_2^2`` so that a probability vector reproduces ``W(x)``."""
    _require_nondegenerate(x.space)
    w = eigenvalue_matrix(w, x.space.n)
    norm_sq = x.hilbert_norm_sq
    if norm_sq == 0.0:
        raise PreconditionError("the zero vector has no stochastic reinterpretation")
    w_x = norm_sq * x.space.g[:, None] * w
    p = np.abs(x.coords) ** 2 / norm_sq
    w_x.setflags(write=False)
    p.setflags(write=False)
    return Reinterpretation(w_x, p)
