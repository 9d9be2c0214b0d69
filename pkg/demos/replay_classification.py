"""
Replaying the classifications
=============================

Each replay runs the whole argument and records every inequality,
determinant and search as a numbered trace step.
"""

# %%
from nodalcalc.cli import replay

r = replay("theorem-1.3")
print(r.render_text())

# %%
# The near-maximal case lists every surviving case with its existence
# status, and the two values of K^2 ruled out by the mod-2 argument.

data = replay("theorem-1.4").to_json()
for c in data["cases"]:
    print(c)
print("excluded:", data["excluded"])
