# %% [markdown]
# # Driving the command line
#
# ``tropweil`` wraps every operation; here it is called in-process.

# %%
from tropweil.cli import run_command

maxplus = "max(x,3)+max(x,2)-max(x,1)"
for argv in (
    ["order", "--expr", maxplus, "--length", "7", "--point", "2"],
    ["reciprocity", "--expr", maxplus, "--expr", "x", "--length", "7"],
    ["classical", "z/(z-2)", "(z-1)/(z-3)"],
    ["export-dot", "--expr", maxplus, "--length", "7"],
):
    status, text = run_command(argv)
    print("$ tropweil", " ".join(argv), f"  (exit {status})")
    print(text)
    print()

# %%
# A malformed expression is a parse error, exit status 1.
print(run_command(["divisor", "--expr", "max(x", "--length", "7"]))
