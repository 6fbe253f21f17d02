# %% [markdown]
# # Building the family
#
# Every symmetric or anti-symmetric truth table on n variables is an XOR of
# some subset of the variables, optionally complemented.  There are 2^n of
# each polarity.

# %%
from symfun import Family, capacity, classify, construct_family, format_table, generation_order, to_affine
from symfun.boolfn import TruthTable

for n in (2, 3):
    print(f"n = {n}")
    for tt in construct_family(n).positives:
        print(f"  {str(to_affine(tt)):<14} {tt.bin():<10} {format_table(tt, 'hex'):>3} {tt.value:>4}")

# %% [markdown]
# The raw construction order: each member of the previous family (in numeric
# order) is emitted twice, once followed by itself and once by its complement.

# %%
print([t.bin() for t in generation_order(2)])
print([t.bin() for t in generation_order(3)][8:])

# %% [markdown]
# Membership test by recursive halving.  AND and the balanced 00010111 both fail.

# %%
for bits in ("0110", "1001", "0001", "00010111"):
    print(bits, classify(TruthTable.from_bin(bits)))

# %% [markdown]
# The family is a lazy sequence, so even n = 20 costs nothing until indexed.

# %%
big = construct_family(20)
print(len(big), to_affine(big[3]), Family(4)[6].hex())

# %%
for n in (1, 2, 5, 20):
    print(n, capacity(n), capacity(n) == 3**n)
