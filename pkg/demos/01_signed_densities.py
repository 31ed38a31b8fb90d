"""
Signed densities of a two-observable instrument
===============================================

Four ground states, two +-1 observables X and Y, and a state in 4-dimensional
Minkowski space.  The joint density is signed; the marginals are honest
probability distributions.
"""

import numpy as np

from qlab import GeometricSpace, Instrument, marginal, measure, reinterpret

m4 = GeometricSpace((1, 1, 1, -1))
s = m4.vector(np.sqrt([5 / 8, 1 / 8, 3 / 8, 1 / 8]))

# rows are ground states, columns are the X and Y returns
w = np.array([[-1, -1], [-1, 1], [1, -1], [1, 1]])
inst = Instrument(w, m4)

joint = inst.density(s)
for outcome, weight in joint.items():
    print(f"q{outcome} = {weight:+.4f}")
print("total weight:", joint.total)

for j, name in enumerate("XY"):
    print(name, "marginal:", marginal(joint, j).as_dict())

print("E(X), E(Y) =", measure(inst, s))

###############################################################################
# The same numbers as a classical expectation: rescale W row by row and use
# p_i = |s_i|^2 / ||s||_2^2.
re = reinterpret(w, s)
print("W^s =\n", re.w_x)
print("p =", re.p, " ->", re.expectation())
