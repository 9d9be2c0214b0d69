"""
Which nodal configurations fit in a unimodular lattice?
========================================================

A rational surface ``S`` with ``k`` nodes and ``b2(S) = 1`` resolves to a
smooth ``X`` whose Picard lattice is unimodular.  The classes of the ``k``
exceptional curves together with the canonical class span ``A1^k + <9-k>``,
a sublattice of finite index.  Finite index forces the determinant to be a
perfect square, and that kills almost every ``k``.
"""

# %%
# The orbifold Euler number gives a first, crude limit on ``k``.

from nodalcalc.lattice import determinant, nodal_block, signature, square_discriminant_test
from nodalcalc.singularities import max_singular_points_filter, orbifold_euler

k_max = max_singular_points_filter(3, 2)
print("orbifold Euler bound:", k_max, "nodes; e_orb at the bound =", orbifold_euler(3, [2] * k_max))

# %%
# Now the determinant table.  Only k = 0 and k = 1 survive.

print(f"{'k':>2} {'|det|':>6} {'square':>7}  signature")
for k in range(k_max + 1):
    g = nodal_block(k, 9 - k)
    print(f"{k:>2} {abs(determinant(g)):>6} {str(square_discriminant_test(g)):>7}  {tuple(signature(g))}")

# %%
# k = 0 is the projective plane and k = 1 is the Hirzebruch surface F2,
# whose (-2)-section contracts to the quadric cone.
