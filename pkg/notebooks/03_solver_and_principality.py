# %% [markdown]
# # Functions with prescribed divisor
#
# A degree-zero divisor is the divisor of a harmonic PL function, found by
# one exact Laplacian solve.  Principal divisors are the ones whose
# solution has integer slopes.

# %%
from tropweil import Divisor, TropicalCurve, divisor, is_principal, new_curve, solve_divisor
from tropweil.potential import edge_currents

seg = new_curve(["a", "b"], [("e1", "a", "b", 1)])
f = solve_divisor(seg, Divisor.at_vertices(seg, {"a": 1, "b": -1}))
print("segment: f(a) =", f.vertex_values["a"], " f(b) =", f.vertex_values["b"])

# %%
bigon = TropicalCurve(["u", "v"], [("e1", "u", "v", 1), ("e2", "u", "v", 1)])
D = Divisor.at_vertices(bigon, {"u": 1, "v": -1})
f = solve_divisor(bigon, D)
print("bigon potential at v:", f.vertex_values["v"])
print("slopes:", {e: [str(s) for s in ss] for e, ss in edge_currents(f).items()})
print("div(f) == D:", divisor(f) == D)
print("(u)-(v) principal:", is_principal(bigon, D))
print("2(u)-2(v) principal:", is_principal(bigon, 2 * D))

# %%
# Moving the basepoint only shifts the solution by a constant.
g = solve_divisor(bigon, D, basepoint="v")
print("difference:", {v: g.vertex_values[v] - f.vertex_values[v] for v in bigon.vertices})
