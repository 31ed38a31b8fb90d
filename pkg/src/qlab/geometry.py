"""Orthogonal geometries of arbitrary signature.

A space is fixed by a diagonal metric ``g`` with entries +1, -1 or 0, stored
in the order (+1 block, -1 block, 0 block).  The scalar product is
``(x|y) = sum_i g_i conj(x_i) y_i``; its quadric norm ``(x|x)`` may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, GeometryError, PreconditionError
from .linalg import EPS_UNITARY, as_matrix, is_unitary, max_norm

EPS_STATE = 1e-9
EPS_ISO = 1e-9


@dataclass(frozen=True)
class GeometricSpace:
    signature: tuple[int, ...]

    def __post_init__(self):
        sig = tuple(int(v) for v in self.signature)
        if not sig:
            raise GeometryError("signature must be non-empty")
        if any(v not in (1, -1, 0) for v in sig):
            raise GeometryError(f"signature entries must be +1, -1 or 0: {sig}")
        rank = {1: 0, -1: 1, 0: 2}
        if any(rank[a] > rank[b] for a, b in zip(sig, sig[1:])):
            raise GeometryError(f"signature must list +1 entries, then -1, then 0: {sig}")
        object.__setattr__(self, "signature", sig)

    @classmethod
    def hilbert(cls, n: int) -> GeometricSpace:
        return cls((1,) * n)

    @classmethod
    def minkowski(cls, n: int) -> GeometricSpace:
        return cls((1,) * (n - 1) + (-1,))

    @property
    def n(self) -> int:
        return len(self.signature)

    @property
    def r(self) -> int:
        return sum(1 for v in self.signature if v == 1)

    @property
    def s(self) -> int:
        return sum(1 for v in self.signature if v != 0)

    @property
    def g(self) -> np.ndarray:
        return np.array(self.signature, dtype=float)

    @property
    def metric(self) -> np.ndarray:
        return np.diag(self.g)

    @property
    def is_hilbert(self) -> bool:
        return self.r == self.n

    @property
    def is_minkowski(self) -> bool:
        return self.s == self.n and self.n - self.r == 1

    def vector(self, coords) -> StateVector:
        return StateVector(coords, self)

    def __str__(self):
        return "(" + ",".join("+1" if v == 1 else str(v) for v in self.signature) + ")"


class StateVector:
    """Complex coordinate vector bound to a geometric space."""

    __slots__ = ("coords", "space")

    def __init__(self, coords, space: GeometricSpace):
        c = np.array(coords, dtype=complex).reshape(-1)
        if c.shape[0] != space.n:
            raise DimensionError(f"vector of length {c.shape[0]} does not fit space of dimension {space.n}")
        c.setflags(write=False)
        self.coords = c
        self.space = space

    def __repr__(self):
        return f"StateVector({self.coords!r}, space={self.space})"

    def __len__(self):
        return self.space.n

    def __add__(self, other: StateVector) -> StateVector:
        _same_space(self, other)
        return StateVector(self.coords + other.coords, self.space)

    def __rmul__(self, scalar) -> StateVector:
        return StateVector(scalar * self.coords, self.space)

    def __truediv__(self, scalar) -> StateVector:
        return StateVector(self.coords / scalar, self.space)

    @property
    def hilbert_norm_sq(self) -> float:
        c = self.coords
        return float(np.sum(c.real * c.real + c.imag * c.imag))


def _same_space(x: StateVector, y: StateVector) -> None:
    if x.space != y.space:
        raise GeometryError(f"vectors live in different spaces {x.space} and {y.space}")


def inner(x: StateVector, y: StateVector) -> complex:
    _same_space(x, y)
    g = x.space.g
    xr, xi = x.coords.real, x.coords.imag
    yr, yi = y.coords.real, y.coords.imag
    # split real/imag products so that (y|x) == conj((x|y)) bit for bit
    re = np.sum(g * (xr * yr + xi * yi))
    im = np.sum(g * (xr * yi - xi * yr))
    return complex(re, im)


def quadric_norm(x: StateVector) -> float:
    value = inner(x, x)
    assert abs(value.imag) <= 1e-14 * max(1.0, abs(value.real))
    return value.real


def signed_parts(x: StateVector) -> tuple[StateVector, StateVector, StateVector]:
    """Split ``x`` into its components on V+, V- and V0."""
    g = x.space.g
    return tuple(StateVector(np.where(g == sign, x.coords, 0), x.space) for sign in (1, -1, 0))


def is_state(x: StateVector, tol: float = EPS_STATE) -> bool:
    return abs(quadric_norm(x) - 1.0) <= tol


def metric_defect(t, space: GeometricSpace) -> float:
    m = as_matrix(t)
    if m.shape != (space.n, space.n):
        raise GeometryError(f"operator of shape {m.shape} does not act on dimension {space.n}")
    big_g = space.metric
    return max_norm(m.conj().T @ big_g @ m - big_g)


def is_isometry(t, space: GeometricSpace, tol: float = EPS_ISO) -> bool:
    return metric_defect(t, space) <= tol


class Isometry:
    """A metric preserving operator of a geometric space."""

    __slots__ = ("matrix", "space")

    def __init__(self, matrix, space: GeometricSpace, tol: float = EPS_ISO):
        m = as_matrix(matrix).copy()
        if not is_isometry(m, space, tol):
            raise PreconditionError(f"matrix is not an isometry of {space} (defect {metric_defect(m, space):.3g})")
        m.setflags(write=False)
        self.matrix = m
        self.space = space

    @classmethod
    def identity(cls, space: GeometricSpace) -> Isometry:
        return cls(np.eye(space.n), space)

    def __repr__(self):
        return f"Isometry({self.matrix!r}, space={self.space})"

    def __call__(self, x: StateVector) -> StateVector:
        if x.space != self.space:
            raise GeometryError(f"isometry of {self.space} applied to a vector of {x.space}")
        return StateVector(self.matrix @ x.coords, self.space)

    def __matmul__(self, other: Isometry) -> Isometry:
        if other.space != self.space:
            raise GeometryError("cannot compose isometries of different spaces")
        return Isometry(self.matrix @ other.matrix, self.space)


def block_unitary_isometry(u_plus, u_minus, space: GeometricSpace) -> Isometry:
    """Act by ``u_plus`` on V+ and by ``u_minus`` on V-."""
    if space.s != space.n:
        raise GeometryError("block construction needs a space without zero directions")
    r = space.r
    up = as_matrix(u_plus) if r else np.zeros((0, 0), dtype=complex)
    um = as_matrix(u_minus) if space.n - r else np.zeros((0, 0), dtype=complex)
    if up.shape != (r, r) or um.shape != (space.n - r, space.n - r):
        raise DimensionError(f"blocks {up.shape}, {um.shape} do not match signature {space}")
    if (r and not is_unitary(up, EPS_UNITARY)) or (space.n - r and not is_unitary(um, EPS_UNITARY)):
        raise PreconditionError("both blocks must be unitary")
    m = np.zeros((space.n, space.n), dtype=complex)
    m[:r, :r] = up
    m[r:, r:] = um
    return Isometry(m, space)


def same_time_slice(x: StateVector, y: StateVector, tol: float = EPS_STATE) -> bool:
    """True when two events of a Minkowski space carry the same time coordinate."""
    _same_space(x, y)
    if not x.space.is_minkowski:
        raise GeometryError(f"time slices need a Minkowski signature, got {x.space}")
    return abs(x.coords[-1] - y.coords[-1]) <= tol
