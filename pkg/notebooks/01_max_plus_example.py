# %% [markdown]
# # A max-plus function on a segment
#
# Build f(x) = max(x,3) + max(x,2) - max(x,1) on a segment of length 7,
# read off its orders, and check reciprocity against g(x) = x.

# %%
from fractions import Fraction

from tropweil import divisor, order, reciprocity_sides, weil_symbol
from tropweil.expr import compile_on_segment

f = compile_on_segment("max(x,3)+max(x,2)-max(x,1)", 7)
g = compile_on_segment("x", 7)
print("breakpoints:", [str(p) for p in f.breakpoints()])
print("slopes on e1:", [str(s) for s in f.slopes("e1")])

# %%
# Orders on a quarter grid: only 1, 2, 3 and the far endpoint carry weight.
for k in range(29):
    t = Fraction(k, 4)
    o = order(f, f.curve.point(edge="e1", offset=t))
    if o:
        print(f"ord_{t}(f) = {o}")
print("div(f) =", divisor(f))

# %%
for p in sorted(set(divisor(f).support) | set(divisor(g).support), key=lambda q: q.sort_key()):
    print(f"[f,g]_{p} = {weil_symbol(f, g, p)}")
lhs, rhs = reciprocity_sides(f, g)
print("sum ord(g) f =", lhs, "  sum ord(f) g =", rhs)
