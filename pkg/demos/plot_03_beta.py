"""
The generator beta of the truncated complex
===========================================

Truncating alpha^m = (x1 + x5 + x9)^m to {max(i, j) >= 0} keeps exactly
the words in {x5, x9} or in {x5, x1}.  Over GF(2) that is

    beta = (x5 + x9)^m + (x5 + x1)^m + x5^m

and it generates the homology of the truncation in grading 0.
"""

from floer_gamma.engine import Region, column_model_check, truncate, verify_beta
from floer_gamma import build_9_42, tensor_power

for m in range(1, 5):
    r = verify_beta(m)
    print(f"m={m}: {r.components} terms, grading {r.grading}, dim H = {r.homology_dim}")

print(verify_beta(2).beta)

# The {i = 0, j <= 0} column looks like a power of the trefoil column.
c = tensor_power(build_9_42(), 2)
print(len(truncate(c, 0, Region.band_i(0))), "generators in the column;", column_model_check(2, c))
