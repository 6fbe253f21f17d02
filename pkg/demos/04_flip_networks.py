# %% [markdown]
# # Flip networks, design problems and the id table
#
# Sandwiching a member's oracle between Hadamard layers is equivalent to
# inverting the lines of its variables, plus a phase on the ancilla for
# negative members.

# %%
from symfun import (
    AffineForm, TruthTable, check_table5_structure, read_basis, sandwich, selftest,
    solve_function, solve_output, synthesize,
)
from symfun.synth import table5_labels

net = synthesize(AffineForm(2, 0b11, 0))
print(net.to_text())
print(net.apply(0), read_basis(sandwich(TruthTable.from_bin("0110"), 0)))

# %% [markdown]
# Which function takes |1,0,0,0,1> to |1,1,1,0,1>?  And where does 3333 send
# |0,0,0,0,1>?

# %%
af, tt, fid = solve_function("1000", "1110")
print(af, tt.hex(), fid)
print(format(solve_output("0000", TruthTable.from_hex("3333")), "04b"))

# %%
for row in table5_labels(4)[:4]:
    print(" ".join(row))
print(check_table5_structure(4))

# %% [markdown]
# The same equivalence doubles as a hardware self-test: break one piece of
# the simulated machine and some case stops matching.

# %%
print(selftest(4).summary())
for fault in ("drop-stage:2", "skip-swap:5", "flip-sign:9"):
    print(selftest(4, fault).summary())
