# %% [markdown]
# # Hadamard, oracle, Hadamard
#
# Amplitudes are exact integers with a sqrt(2) scale exponent, so every
# intermediate vector can be printed and compared without rounding.

# %%
from symfun import (
    TruthTable, apply_oracle, basis_state, construct_family, factor_state,
    hadamard_all, read_basis, sandwich,
)
from symfun.errors import NotBasis, NotFactorable
from symfun.statesim import StateVector, input_state

start = input_state(0, 2)
print("input         ", start)
spread = hadamard_all(start)
print("after H layer ", spread)

# %% [markdown]
# The oracle swaps amplitude pairs wherever the truth table has a 1.

# %%
for bits in ("0000", "0011", "0101", "0110"):
    print(bits, apply_oracle(spread, TruthTable.from_bin(bits)))

# %% [markdown]
# Full pipeline for the eight n = 2 members: each lands on a signed basis state.

# %%
for tt in construct_family(2):
    out = sandwich(tt, 0)
    print(tt.bin(), out.amps.tolist(), read_basis(out))

# %% [markdown]
# AND is not a member; its output is spread over four basis states.

# %%
and_out = sandwich(TruthTable.from_bin("0001"), 0)
print(and_out)
try:
    read_basis(and_out)
except NotBasis as exc:
    print("NotBasis:", exc)

# %% [markdown]
# Factoring the state just before the last Hadamard layer reads the qubits
# off by comparing halves.

# %%
mid = apply_oracle(hadamard_all(input_state(0, 2)), TruthTable.from_bin("0110"))
print(mid, factor_state(mid))
try:
    factor_state(StateVector(3, [1, -1, 1, 1, 1, -1, 1, -1], 3))
except NotFactorable as exc:
    print("NotFactorable:", exc)
