# %% [markdown]
# # Reciprocity on random curves
#
# Random metric graphs with loops and parallel edges, random PL functions
# with rational slopes.  Every instance must balance exactly.

# %%
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from generators import random_curve, random_function  # noqa: E402

from tropweil import reciprocity_sides, symbol_sum  # noqa: E402
from tropweil.weil import edge_terms  # noqa: E402

rng = random.Random(1)
rows = []
for i in range(20):
    c = random_curve(rng)
    f = random_function(rng, c, integer=i % 2 == 0)
    g = random_function(rng, c, integer=False)
    lhs, rhs = reciprocity_sides(f, g)
    rows.append((len(c.vertices), len(c.edges), sum(e.is_loop for e in c.edges), lhs, rhs))
    assert lhs == rhs and symbol_sum(f, g) == 0

print(" V  E loops  lhs == rhs")
for v, e, loops, lhs, rhs in rows:
    print(f"{v:2d} {e:2d} {loops:5d}  {lhs}")

# %%
# The same balance holds edge by edge once the vertex terms are split out.
c = random_curve(rng, max_vertices=3)
f, g = random_function(rng, c), random_function(rng, c, integer=False)
eid = c.edges[0].id if c.edges else None
if eid is not None:
    print("edge", eid, "terms:", [str(x) for x in edge_terms(f, g, eid)])
