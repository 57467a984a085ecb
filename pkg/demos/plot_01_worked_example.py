"""
From a Lagrangian subspace to a delta-matroid
=============================================

A small subspace of V_E for E = {1, 2}, its feasible sets, and the way back.
"""

from deltalag import nu, nu_inverse
from deltalag.correspondence import feasible_mask
from deltalag.textio import format_family, format_set, parse_lagrangian

# Two spanning vectors; ``^`` marks the dual copy of an element.
L = parse_lagrangian("1^+2+2^\n1+2\n")
print("L =", L)
print("elements:", len(L.elements()))

###############################################################################
# Y is feasible when L meets the coordinate space <Y^, E \ Y> only in 0.

for y in range(4):
    print(f"Y = {format_set(L.ground, y):>4}  feasible: {feasible_mask(L, y)}")

S = nu(L)
print("nu(L) =", format_family(S))

###############################################################################
# The inverse twists the system until the empty set is feasible, reads off a
# symmetric matrix, and dualizes back.

print("nu_inverse(nu(L)) == L:", nu_inverse(S) == L)
