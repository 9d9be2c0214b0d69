"""
Mod-2 obstruction to many disjoint nodal curves
===============================================

Reduce ``mu`` disjoint nodal classes mod 2.  The image is totally isotropic
in ``L/2L``, so a kernel of dimension ``mu - rank//2`` is forced, and every
kernel vector has weight divisible by 4.  When no doubly-even code of that
dimension exists, the configuration is impossible.
"""

# %%
from nodalcalc.f2 import doubly_even_subspace_search, nodal_embedding_obstruction

for mu in range(9):
    r = nodal_embedding_obstruction(mu, mu + 2)
    print(f"mu={mu}  K^2={8 - mu}  kernel dim >= {r.min_kernel_dim}  feasible={r.feasible}  {r.note}")

# %%
# The first doubly-even code of dimension 3 in length 7 is the even part of
# the Hamming code.  Its nonzero words all have weight 4.

w = doubly_even_subspace_search(7, 3)
print(w.to_json(), w.weights())

# %%
# Beyond the range that matters here the same test keeps biting: lengths
# 11 and 13 also fail in the mu = rank - 2 regime.

print([mu for mu in range(17) if not nodal_embedding_obstruction(mu, mu + 2).feasible])
