"""
Non-orientable genus in punctured n CP^2
========================================

For K = #^{n+k} 9_42 the lower bound -sigma/2 + d(S^3_1) - n meets the
construction count k.
"""

from floer_gamma.bounds import builtin_seifert, signature, theorem13_table

sigma = signature(builtin_seifert()["9_42"])
print("signature of 9_42:", sigma)

print(" n  k  lower  upper")
for n in range(3):
    for k in range(1, 4):
        lower, upper = theorem13_table(n, k)
        print(f"{n:2d} {k:2d} {lower:6d} {upper:6d}")
