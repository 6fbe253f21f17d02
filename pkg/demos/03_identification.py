# %% [markdown]
# # Identifying a hidden function
#
# One superposition query recovers the mask exactly; with amplitude access
# the polarity comes too.  Measurement loses the sign.

# %%
from symfun import (
    BitOracle, HiddenOracle, TruthTable, check_simon_invariance, classical_identify_affine,
    classical_identify_naive, construct_family, identify_amplitude, identify_measured,
)
from symfun.errors import PromiseViolated

secret = TruthTable.from_hex("3C3C")
oracle = HiddenOracle.hiding(secret)
print(identify_amplitude(oracle).to_json())
print(identify_measured(oracle, seed=0).to_json())
print("quantum queries used:", oracle.queries)

# %%
bits = BitOracle.hiding(secret)
print(classical_identify_affine(bits, 4))
print(classical_identify_naive(bits, 4)[1], "queries for the full table")

# %% [markdown]
# A function and its complement measure the same; only the sign differs.

# %%
for bits in ("0011", "1100"):
    o = HiddenOracle.hiding(TruthTable.from_bin(bits))
    print(bits, identify_measured(o, seed=1).mask, identify_amplitude(o).constant)

# %%
try:
    identify_amplitude(HiddenOracle.hiding(TruthTable.from_bin("0001")))
except PromiseViolated as exc:
    print("PromiseViolated:", exc)

# %% [markdown]
# Shifting the inputs by xi leaves a member unchanged exactly when xi hits an
# even number of its variables.

# %%
for bits, xi in [("0011", 0b01), ("0101", 0b10), ("0110", 0b11), ("0011", 0b10)]:
    print(bits, format(xi, "02b"), check_simon_invariance(TruthTable.from_bin(bits), xi))
