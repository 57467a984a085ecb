"""
Four-term relations and quotient dimensions
===========================================
"""

from deltalag import hopf
from deltalag.cli import describe
from deltalag.textio import parse_lagrangian

l = parse_lagrangian("1^\n2^+3\n3^+2\n")
rel = hopf.four_term_element(l, 1, 2)
print("relation for (1, 2):")
for k, c in rel.items():
    print(f"  {'+' if c > 0 else '-'}{abs(c)} {describe(k)}")

###############################################################################
# Dimensions of each degree modulo the relations, on both sides, under the
# two sign conventions.

for conv in hopf.CONVENTIONS:
    for side in hopf.SIDES:
        dims = [hopf.quotient_dimension(side, n, conv) for n in range(4)]
        print(f"{conv:<19} {side:<12} {dims}")
