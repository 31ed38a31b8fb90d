"""Two-phase dense tableau simplex with Bland's rule, sized for a handful of variables.

Solves ``max c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS_LP = 1e-9


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: np.ndarray | None = None
    value: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == "optimal"


def _pivot(tab: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    for i in range(tab.shape[0]):
        if i != row and tab[i, col] != 0.0:
            tab[i] -= tab[i, col] * tab[row]
    basis[row] = col


def _run(tab: np.ndarray, basis: list[int], allowed: int, eps: float) -> bool:
    """Iterate on ``tab`` (objective in the last row, to be minimized). Returns False if unbounded."""
    m = tab.shape[0] - 1
    while True:
        cost = tab[-1, :allowed]
        entering = next((j for j in range(allowed) if cost[j] < -eps), None)
        if entering is None:
            return True
        col = tab[:m, entering]
        best = None
        for i in range(m):
            if col[i] > eps:
                ratio = tab[i, -1] / col[i]
                # Bland: smallest ratio, ties to the smallest basic index
                if best is None or ratio < best[0] - eps or (abs(ratio - best[0]) <= eps and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], entering)


def linprog_max(c, a_ub=None, b_ub=None, a_eq=None, b_eq=None, eps: float = EPS_LP) -> LPResult:
    c = np.asarray(c, dtype=float)
    nvar = c.shape[0]
    a_ub = np.zeros((0, nvar)) if a_ub is None else np.atleast_2d(np.asarray(a_ub, dtype=float))
    b_ub = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=float).reshape(-1)
    a_eq = np.zeros((0, nvar)) if a_eq is None else np.atleast_2d(np.asarray(a_eq, dtype=float))
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float).reshape(-1)
    if a_ub.shape != (b_ub.shape[0], nvar) or a_eq.shape != (b_eq.shape[0], nvar):
        raise ValueError("constraint shapes do not match the objective")

    m_ub, m_eq = a_ub.shape[0], a_eq.shape[0]
    m = m_ub + m_eq
    # columns: structural | slacks | artificials | rhs
    nslack = m_ub
    ncols = nvar + nslack + m
    tab = np.zeros((m + 1, ncols + 1))
    tab[:m_ub, :nvar] = a_ub
    tab[:m_ub, nvar:nvar + nslack] = np.eye(m_ub)
    tab[:m_ub, -1] = b_ub
    tab[m_ub:m, :nvar] = a_eq
    tab[m_ub:m, -1] = b_eq
    neg = tab[:m, -1] < 0
    tab[:m][neg] *= -1.0
    tab[:m, nvar + nslack:ncols] = np.eye(m)
    basis = list(range(nvar + nslack, ncols))

    # phase I: minimize the sum of artificials
    tab[-1, :] = -tab[:m].sum(axis=0)
    tab[-1, nvar + nslack:ncols] = 0.0
    _run(tab, basis, nvar + nslack, eps)
    if -tab[-1, -1] > eps * max(1.0, np.abs(tab[:m, -1]).max(initial=0.0)):
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop rows that are redundant
    keep = []
    for i in range(m):
        if basis[i] >= nvar + nslack:
            j = next((j for j in range(nvar + nslack) if abs(tab[i, j]) > eps), None)
            if j is None:
                continue
            _pivot(tab, basis, i, j)
        keep.append(i)
    tab = np.vstack([tab[keep], tab[-1:]])
    basis = [basis[i] for i in keep]
    tab = np.delete(tab, np.s_[nvar + nslack:ncols], axis=1)

    # phase II: minimize -c
    tab[-1, :] = 0.0
    tab[-1, :nvar] = -c
    for i, b in enumerate(basis):
        if tab[-1, b] != 0.0:
            tab[-1] -= tab[-1, b] * tab[i]
    if not _run(tab, basis, nvar + nslack, eps):
        return LPResult("unbounded")

    x = np.zeros(nvar + nslack)
    for i, b in enumerate(basis):
        x[b] = tab[i, -1]
    x = np.clip(x[:nvar], 0.0, None)
    return LPResult("optimal", x, float(c @ x))
