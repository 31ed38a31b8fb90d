"""Bell numbers, pairwise-product expectations and searches for violation witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, GeometryError, PreconditionError, SizeError
from .geometry import GeometricSpace, Isometry, StateVector
from .measurement import SignedDensity, density, eigenvalue_matrix, marginal, reinterpret
from .simplex import EPS_LP, linprog_max

EPS_BELL = 1e-9
PAIRS = ((0, 1), (1, 2), (0, 2))  # XY, YZ, XZ
CONSTRAINT_SETS = ("none", "marginals_nonneg", "pairwise_nonneg", "triple_nonneg")
MAX_SEARCH_DIM = 8


def bell_number(w) -> float:
    a = np.asarray(w, dtype=float)
    if a.size == 0:
        raise DimensionError("the Bell number of an empty matrix is undefined")
    return float(np.max(np.abs(a)))


def pair_expectation(d: SignedDensity, a: int, b: int) -> float:
    """Signed expectation of the product of outcome coordinates ``a`` and ``b``."""
    if d.k != 3:
        raise DimensionError(f"pair expectations need outcomes in R^3, got k = {d.k}")
    if a == b or not (0 <= a < 3 and 0 <= b < 3):
        raise IndexError(f"invalid column pair ({a}, {b})")
    return float(sum(v[a] * v[b] * wt for v, wt in d.items()))


@dataclass(frozen=True)
class BellReport:
    exy: float
    eyz: float
    exz: float
    lhs: float
    bound: float
    triple_density_nonneg: bool
    pairwise_nonneg: tuple[bool, bool, bool]
    marginals_nonneg: tuple[bool, bool, bool]
    satisfied: bool

    def as_dict(self) -> dict:
        return {
            "exy": self.exy,
            "eyz": self.eyz,
            "exz": self.exz,
            "lhs": self.lhs,
            "bound": self.bound,
            "triple_density_nonneg": self.triple_density_nonneg,
            "pairwise_nonneg": list(self.pairwise_nonneg),
            "marginals_nonneg": list(self.marginals_nonneg),
            "satisfied": self.satisfied,
        }


def _report(d: SignedDensity, bound: float, tol: float) -> BellReport:
    exy, eyz, exz = (pair_expectation(d, a, b) for a, b in PAIRS)
    lhs = abs(exy - eyz) + exz
    pair_ok = []
    for a, b in PAIRS:
        acc: dict[tuple[float, float], float] = {}
        for v, wt in d.items():
            acc[(v[a], v[b])] = acc.get((v[a], v[b]), 0.0) + wt
        pair_ok.append(all(wt >= -tol for wt in acc.values()))
    return BellReport(
        exy=exy,
        eyz=eyz,
        exz=exz,
        lhs=lhs,
        bound=bound,
        triple_density_nonneg=d.is_nonnegative(tol),
        pairwise_nonneg=tuple(pair_ok),
        marginals_nonneg=tuple(marginal(d, j).is_nonnegative(tol) for j in range(3)),
        satisfied=lhs <= bound + EPS_BELL,
    )


def bell_check(w, x: StateVector, t: Isometry | None = None, tol: float = 1e-12) -> BellReport:
    """Evaluate the Bell inequality for a three-column instrument in state ``x``.

    ``tol`` is the slack allowed when deciding whether a density weight counts
    as nonnegative.
    """
    w = eigenvalue_matrix(w, x.space.n)
    if w.shape[1] != 3:
        raise DimensionError(f"Bell checks need exactly three columns, got {w.shape[1]}")
    y = x if t is None else t(x)
    bound = bell_number(w) ** 2
    return _report(density(y, w), bound, tol)


def hilbert_rescaled_check(w, x: StateVector, tol: float = 1e-12) -> BellReport:
    """Bell check of the classical reinterpretation: rescaled matrix, normalized state, Hilbert metric."""
    w = eigenvalue_matrix(w, x.space.n)
    if w.shape[1] != 3:
        raise DimensionError(f"Bell checks need exactly three columns, got {w.shape[1]}")
    re = reinterpret(w, x)
    hilbert = GeometricSpace.hilbert(x.space.n)
    x_tilde = StateVector(x.coords / np.sqrt(x.hilbert_norm_sq), hilbert)
    return bell_check(re.w_x, x_tilde, tol=tol)


# --- violation search -------------------------------------------------------

# row type index b encodes signs (x, y, z) as bits 2, 1, 0 with a set bit meaning -1
ROW_TYPES = np.array([[-1.0 if b >> s & 1 else 1.0 for s in (2, 1, 0)] for b in range(8)])


def _row_map(flip_xz: bool, flip_y: bool, swap_xz: bool) -> tuple[int, ...]:
    out = []
    for b in range(8):
        x, y, z = b >> 2 & 1, b >> 1 & 1, b & 1
        if flip_xz:
            x, z = 1 - x, 1 - z
        if flip_y:
            y = 1 - y
        if swap_xz:
            x, z = z, x
        out.append(x << 2 | y << 1 | z)
    return tuple(out)


# column operations leaving |E(XY) - E(YZ)| + E(XZ) and every nonnegativity constraint invariant
SYMMETRIES = tuple(_row_map(*flags) for flags in itertools.product((False, True), repeat=3))


@dataclass(frozen=True)
class Witness:
    """A sign pattern with nonnegative weights that breaks the Bell inequality."""

    space: GeometricSpace
    columns: np.ndarray
    weights: np.ndarray
    report: BellReport
    norm_cap: float
    constraints: str
    pattern: tuple[int, ...] = field(default=())

    def state(self) -> StateVector:
        return StateVector(np.sqrt(self.weights), self.space)

    def as_dict(self) -> dict:
        return {
            "signature": list(self.space.signature),
            "columns": self.columns.tolist(),
            "weights": self.weights.tolist(),
            "norm_cap": self.norm_cap,
            "constraints": self.constraints,
            "pattern": list(self.pattern),
            "report": self.report.as_dict(),
        }


def _canonical_patterns(space: GeometricSpace):
    """Row-type tuples up to row permutations within a signature class and the column symmetries."""
    blocks = []
    start = 0
    for sign in (1, -1):
        size = sum(1 for v in space.signature if v == sign)
        blocks.append((start, size))
        start += size

    def canon(pattern):
        best = pattern
        for sym in SYMMETRIES:
            image = []
            for lo, size in blocks:
                image.extend(sorted(sym[b] for b in pattern[lo:lo + size]))
            image = tuple(image)
            if image < best:
                best = image
        return best

    per_block = [itertools.combinations_with_replacement(range(8), size) for _, size in blocks]
    for parts in itertools.product(*per_block):
        pattern = tuple(itertools.chain.from_iterable(parts))
        if canon(pattern) == pattern:
            yield pattern


def _group_rows(cols: np.ndarray) -> list[list[int]]:
    groups: dict[tuple, list[int]] = {}
    for i, row in enumerate(cols):
        groups.setdefault(tuple(row), []).append(i)
    return list(groups.values())


def _nonneg_rows(cols: np.ndarray, g: np.ndarray, constraints: str) -> list[np.ndarray]:
    """Linear forms ``sum_{i in group} g_i p_i`` that must stay nonnegative."""
    if constraints == "none":
        return []
    if constraints == "triple_nonneg":
        projections = [(0, 1, 2)]
    elif constraints == "pairwise_nonneg":
        projections = list(PAIRS)
    else:
        projections = [(0,), (1,), (2,)]
    forms = []
    for proj in projections:
        for idx in _group_rows(cols[:, proj]):
            if any(g[i] < 0 for i in idx):
                row = np.zeros(len(g))
                row[idx] = g[idx]
                forms.append(row)
    return forms


def violation_search(
    space: GeometricSpace,
    norm_cap: float = 2.0,
    constraints: str = "none",
    eps: float = EPS_BELL,
) -> list[Witness]:
    """Search all +-1 column triples for weights that break the Bell inequality.

    For each sign pattern two linear programs maximize ``+-(E(XY) - E(YZ)) + E(XZ)``
    over weights ``p >= 0`` with ``sum g_i p_i = 1`` and ``sum p_i <= norm_cap``,
    subject to the chosen nonnegativity constraints on the signed density.
    Every optimum exceeding the bound 1 is re-evaluated through ``bell_check``
    and returned, sorted by decreasing left-hand side.
    """
    if constraints not in CONSTRAINT_SETS:
        raise PreconditionError(f"unknown constraint set {constraints!r}; choose from {CONSTRAINT_SETS}")
    if space.n > MAX_SEARCH_DIM:
        raise SizeError(f"violation search enumerates sign patterns only up to n = {MAX_SEARCH_DIM}")
    if space.s != space.n:
        raise GeometryError(f"violation search needs a signature without zero entries, got {space}")
    if norm_cap < 1.0:
        raise PreconditionError("norm_cap must be at least 1")

    g = space.g
    n = space.n
    found: list[tuple[float, tuple[int, ...], Witness]] = []
    for pattern in _canonical_patterns(space):
        cols = ROW_TYPES[list(pattern)]
        xy = cols[:, 0] * cols[:, 1]
        yz = cols[:, 1] * cols[:, 2]
        xz = cols[:, 0] * cols[:, 2]
        forms = _nonneg_rows(cols, g, constraints)
        best = None
        for sign in (1.0, -1.0):
            a_ub = [np.ones(n), -sign * g * (xy - yz)] + [-f for f in forms]
            b_ub = [norm_cap, 0.0] + [0.0] * len(forms)
            res = linprog_max(g * (sign * (xy - yz) + xz), a_ub, b_ub, [g], [1.0], eps=EPS_LP)
            if res.ok and (best is None or res.value > best.value + eps):
                best = res
        if best is None or best.value <= 1.0 + eps:
            continue
        witness_space = space
        report = bell_check(cols, StateVector(np.sqrt(best.x), witness_space), tol=EPS_LP)
        if report.lhs <= report.bound + eps:
            continue
        witness = Witness(witness_space, cols, best.x, report, norm_cap, constraints, pattern)
        found.append((report.lhs, pattern, witness))
    found.sort(key=lambda item: (-round(item[0], 9), item[1]))
    return [w for _, _, w in found]


# --- Hilbert feasibility ------------------------------------------------------


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    p: np.ndarray | None


def hilbert_feasibility(table, targets) -> Feasibility:
    """Is there a probability vector over the rows of ``table`` meeting every target?

    Each target is ``(outcome, probability)``.  An outcome is either a full row
    tuple (a joint outcome) or a ``{column: value}`` mapping (a marginal event).
    The returned ``p`` plays the role of ``|x_i|^2`` for a Hilbert space state.
    """
    w = eigenvalue_matrix(table)
    n = w.shape[0]
    a_eq = [np.ones(n)]
    b_eq = [1.0]
    for outcome, prob in targets:
        if not 0.0 <= prob <= 1.0:
            raise PreconditionError(f"target probability {prob} outside [0, 1]")
        if isinstance(outcome, dict):
            mask = np.ones(n, dtype=bool)
            for j, v in outcome.items():
                if not 0 <= int(j) < w.shape[1]:
                    raise PreconditionError(f"target column {j} out of range")
                mask &= w[:, int(j)] == v
        else:
            row = np.asarray(outcome, dtype=float).reshape(-1)
            if row.shape[0] != w.shape[1]:
                raise PreconditionError(f"joint outcome {tuple(row)} does not have {w.shape[1]} entries")
            mask = np.all(w == row, axis=1)
        a_eq.append(mask.astype(float))
        b_eq.append(float(prob))
    if len(a_eq) == 1:
        return Feasibility(True, np.full(n, 1.0 / n))
    res = linprog_max(np.zeros(n), a_eq=a_eq, b_eq=b_eq)
    if not res.ok:
        return Feasibility(False, None)
    return Feasibility(True, res.x)
