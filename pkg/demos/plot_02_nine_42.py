"""
The knot 9_42 and its connected sums
====================================

d(S^3_1) vanishes for every connected sum of copies of 9_42 even though
the signature keeps dropping.  This script checks m = 1..5.
"""

import time

from floer_gamma import build_9_42, d_plus_one_surgery, homology, tensor_power

k = build_9_42()
h = homology(k)
print("H(G_0):", h.dims, "generated by", h.representatives[0][0])

for m in range(1, 6):
    t0 = time.perf_counter()
    c = tensor_power(k, m)
    d = d_plus_one_surgery(c)
    print(f"m={m}  generators={len(c):6d}  d={d}  ({time.perf_counter() - t0:.2f}s)")
