"""
Auditing the lattice arithmetic
===============================

One parameter set by hand, then a seeded batch.  All quantities are exact.
"""

from floer_gamma.lattice import SpincParameters, audit_inequality_chain, q_wbar, run_audit

print(q_wbar(1).matrix, "signature", q_wbar(1).signature())

p = SpincParameters(n=1, j=0, a=(0,), b=1, g=0)
for key, value in audit_inequality_chain(p, d_minus=0).as_dict().items():
    print(f"{key:24} {value}")

summary = run_audit(seed=1, trials=1000)
print("passed:", summary["passed"], summary["failure_counts"])
print("(3) held in", summary["ineq3_holds"], "trials, (5) in", summary["ineq5_holds"])
