"""
Isometries: unitary blocks and Lorentz boosts
=============================================
"""

import numpy as np

from qlab import GeometricSpace, Isometry, block_unitary_isometry, inner, is_isometry

m3 = GeometricSpace((1, 1, -1))
th = 0.4
rot = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
t = block_unitary_isometry(rot, [[1j]], m3)

rng = np.random.default_rng(0)
x = m3.vector(rng.normal(size=3) + 1j * rng.normal(size=3))
y = m3.vector(rng.normal(size=3) + 1j * rng.normal(size=3))
print("(x|y)   =", inner(x, y))
print("(Tx|Ty) =", inner(t(x), t(y)))

# a boost mixes space and time yet preserves the metric
m2 = GeometricSpace((1, -1))
a = 0.5
boost = np.array([[np.cosh(a), np.sinh(a)], [np.sinh(a), np.cosh(a)]])
print("boost is an isometry:", is_isometry(boost, m2))
print("boost is unitary:", np.allclose(boost.T @ boost, np.eye(2)))
print("swap of space and time in M3 is an isometry:", is_isometry(np.eye(3)[[2, 1, 0]], m3))
inverse = np.array([[np.cosh(a), -np.sinh(a)], [-np.sinh(a), np.cosh(a)]])
print("boost followed by its inverse:\n", (Isometry(boost, m2) @ Isometry(inverse, m2)).matrix.real.round(12))
