"""
Trefoils and their mirrors
==========================

The smallest interesting models: three generators each.  We compute the
correction terms of +1 and -1 surgery and watch mirroring swap them.
"""

from floer_gamma import build_trefoil, d_minus_one_surgery, d_plus_one_surgery, mirror
from floer_gamma.engine import surgery_trace
from floer_gamma.model import serialize_complex

left = build_trefoil("left")
right = build_trefoil("right")
print(serialize_complex(right))

# The trace lists, per translate U^{-l}, whether the tower survives in
# C{max(i, j) >= 0} and at which grading.
for l, nonzero, grading in surgery_trace(right).trace:
    print(f"l={l:+d}  nonzero={nonzero!s:5}  grading={grading}")

for name, c in [("left", left), ("right", right)]:
    print(name, "d(+1) =", d_plus_one_surgery(c), " d(-1) =", d_minus_one_surgery(c))

# mirror(left) is right with starred names
print(sorted(g.name for g in mirror(left).generators))
