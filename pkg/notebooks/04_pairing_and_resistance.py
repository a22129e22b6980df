# %% [markdown]
# # The Weil pairing as effective resistance
#
# TW((p)-(q), (p)-(q)) is the effective resistance between p and q when
# each edge is a resistor of its length.

# %%
from tropweil import CurvePoint, Divisor, TropicalCurve, effective_resistance, tw_pairing

bigon = TropicalCurve(["u", "v"], [("e1", "u", "v", 1), ("e2", "u", "v", 1)])
u, v = CurvePoint(vertex="u"), CurvePoint(vertex="v")
print("bigon R(u,v) =", effective_resistance(bigon, u, v))

# %%
# Series and parallel rules, exactly.
path = TropicalCurve(["a", "b", "c"], [("e1", "a", "b", 2), ("e2", "b", "c", 3)])
print("series 2+3 =", effective_resistance(path, CurvePoint(vertex="a"), CurvePoint(vertex="c")))
tri = TropicalCurve(["a", "b", "c"], [("e1", "a", "b", 1), ("e2", "b", "c", 1), ("e3", "c", "a", 1)])
print("triangle =", effective_resistance(tri, CurvePoint(vertex="a"), CurvePoint(vertex="b")))

# %%
# A point in the middle of an edge works the same way.
mid = tri.point(edge="e1", offset="1/2")
print("vertex to midpoint =", effective_resistance(tri, CurvePoint(vertex="c"), mid))

# %%
D1 = Divisor.at_vertices(tri, {"a": 1, "b": -1})
D2 = Divisor.at_vertices(tri, {"b": 2, "c": -2})
print("TW(D1,D2) =", tw_pairing(tri, D1, D2), " TW(D2,D1) =", tw_pairing(tri, D2, D1))
