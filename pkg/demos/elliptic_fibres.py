"""
Eight disjoint nodal curves on an elliptic surface with e = 12
===============================================================

Every nodal curve lies in a fibre, so the singular fibres must have Euler
numbers summing to 12 and hold 8 disjoint (-2)-curves between them.  The
capacity of each fibre type comes from a maximum independent set in its
dual graph.
"""

# %%
from nodalcalc.fibres import elliptic_fibre_search, fibre_types

for f in fibre_types(12):
    print(f"{f.name:>5}  euler={f.euler:>2}  capacity={f.nodal_capacity}")

# %%
# Only one multiset of fibres does the job.

print(elliptic_fibre_search(12, 8))
print("with 9 curves:", elliptic_fibre_search(12, 9))
