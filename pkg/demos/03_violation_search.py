"""
Searching for Minkowski Bell violations
=======================================

Every +-1 column triple is scanned; a small LP maximizes the Bell left-hand side
over nonnegative weights p_i = |x_i|^2 with sum g_i p_i = 1 and a cap on sum p_i.
"""

from qlab import GeometricSpace, violation_search

for n, cap in ((3, 2.0), (5, 5 / 3)):
    space = GeometricSpace.minkowski(n)
    for constraints in ("none", "marginals_nonneg", "pairwise_nonneg", "triple_nonneg"):
        found = violation_search(space, cap, constraints)
        best = f"{found[0].report.lhs:.4f}" if found else "-"
        print(f"M{n} cap={cap:.3f} {constraints:<17} witnesses={len(found):4d}  best lhs={best}")

top = violation_search(GeometricSpace.minkowski(5), 5 / 3, "pairwise_nonneg")[0]
print("columns X Y Z:\n", top.columns)
print("weights:", top.weights.round(6))
print(top.report)

# Hilbert space admits none
print("Hilbert:", violation_search(GeometricSpace.hilbert(4), 3.0))
