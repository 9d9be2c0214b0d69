"""
Discrepancies of cyclic quotient singularities
==============================================

A cyclic quotient singularity of type ``(n, q)`` resolves to a chain of
rational curves read off the continued fraction of ``n/q``.  Solving a small
linear system gives the discrepancy divisor, which vanishes exactly for
chains of (-2)-curves.
"""

# %%
from nodalcalc.singularities import hj_string, solve_discrepancies

for n, q in [(2, 1), (3, 2), (5, 2), (7, 3), (4, 1), (12, 5)]:
    chain = hj_string(n, q)
    r = solve_discrepancies(chain)
    print(f"({n},{q})  chain={chain}  a={[str(a) for a in r.discrepancies]}  D^2={r.dsq}  |G|={r.group_order}")

# %%
# ADE configurations that are not chains are crepant too.

from nodalcalc.lattice import ade_gram

for label in ("D4", "E6", "E8"):
    print(label, [str(a) for a in solve_discrepancies(ade_gram(label)).discrepancies])
