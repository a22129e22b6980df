# %% [markdown]
# # Classical Weil reciprocity on the projective line
#
# For split rational functions over Q the local symbols multiply to 1,
# including the point at infinity.

# %%
from tropweil import INFINITY, SplitRationalFunction, parse_split, weil_product, weil_symbol_p1
from tropweil.p1oracle import finite_weil_product, polynomial_coefficients, weil_symbols

f = parse_split("z/(z-2)")
g = parse_split("(z-1)/(z-3)")
for p, s in weil_symbols(f, g):
    print(f"[f,g]_{p} = {s}")
print("product:", weil_product(f, g))

# %%
# Rescaling the local parameter does not change any symbol.
print([weil_symbol_p1(f, g, p, scale=7) for p in (0, 1, 2, 3, INFINITY)])

# %%
# For f = z and a monic polynomial g the finite part is the product of
# the roots, which is (-1)^n a0/an.
z = parse_split("z")
for roots in ([1, 2], [1, 2, 3], [-1, 2, 5, 7]):
    g = SplitRationalFunction(1, roots)
    a = polynomial_coefficients(roots)
    n = len(roots)
    print(n, finite_weil_product(z, g), a[0] / a[-1], (-1) ** n * a[0] / a[-1])
