"""
Bell inequality in M5 and its Hilbert space reinterpretation
============================================================
"""

import numpy as np

from qlab import GeometricSpace, bell_check, hilbert_rescaled_check, same_time_slice

m5 = GeometricSpace.minkowski(5)
s = m5.vector(np.full(5, np.sqrt(3) / 3))
A = np.array([-1, 1, 1, 1, 1])
B = np.array([-1, 1, -1, -1, 1])
C = np.array([-1, -1, -1, 1, 1])
w = np.column_stack([A, B, C])

# all three observables leave the time coordinate alone
print("same time slice:", all(same_time_slice(s, m5.vector(np.diag(col) @ s.coords)) for col in w.T))

rep = bell_check(w, s)
print(f"E(XY)={rep.exy:+.4f}  E(YZ)={rep.eyz:+.4f}  E(XZ)={rep.exz:+.4f}")
print(f"lhs={rep.lhs:+.4f}  bound={rep.bound}  satisfied={rep.satisfied}")
print("pairwise densities nonnegative:", rep.pairwise_nonneg)

###############################################################################
# Rescaled matrices, normalized state, Hilbert metric
hil = hilbert_rescaled_check(w, s)
print(f"rescaled: E={hil.exy:.4f}, {hil.eyz:.4f}, {hil.exz:.4f}  bound={hil.bound:.4f}  satisfied={hil.satisfied}")
