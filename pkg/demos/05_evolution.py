"""
Schrödinger and Heisenberg evolutions
=====================================

phi_t = (T^t x)* A (T^t x).  Bounded powers of T give convergent running means;
a Lorentz boost does not.
"""

import numpy as np

from qlab import GeometricSpace, Isometry, evolve, hermitian_lift, interaction_value

j = np.array([[0.0, 1.0, 0.5], [-0.3, 0.0, 2.0], [0.1, 0.0, 1.0]])
a = hermitian_lift(j)
print("lifted interaction matrix:\n", a)
print("total interaction at x=(1,1,1):", interaction_value(a, np.ones(3)))

h3 = GeometricSpace.hilbert(3)
rng = np.random.default_rng(1)
q, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
x = h3.vector(np.ones(3) / np.sqrt(3))
tr = evolve(a, Isometry(q, h3), x, 10_000, window=100, tol=1e-3, heisenberg_check=True)
print(f"unitary T: converged={tr.converged} limit~{tr.limit_estimate:.5f} "
      f"picture mismatch={tr.heisenberg_residual:.2e}")

m2 = GeometricSpace((1, -1))
boost = Isometry([[np.cosh(0.5), np.sinh(0.5)], [np.sinh(0.5), np.cosh(0.5)]], m2)
tr = evolve(np.eye(2), boost, m2.vector([1, 0]), 10_000, window=100, tol=1e-3)
print(f"boost: converged={tr.converged} diverged={tr.diverged} after {tr.values.size} steps")
