"""
The two Hopf algebras and the map between them
==============================================
"""

from deltalag import hopf, verify
from deltalag.cli import describe
from deltalag.textio import parse_lagrangian

E = hopf.GradedElement
x = E.of(parse_lagrangian("1^+2+2^\n1+2\n"))

print("coproduct:")
for (a, b), c in hopf.coproduct(x).items():
    print(f"  {c} * {describe(a)} (x) {describe(b)}")

print("antipode:")
for k, c in hopf.antipode(x).items():
    print(f"  {c} * {describe(k)}")

print("nu:", [describe(k) for k, _ in hopf.nu_hom(x).items()])

###############################################################################
# Which reduction and restriction make nu a coalgebra map?

for (red, res), ok in verify.coproduct_arbiter(3).items():
    print(f"reduce={red:<10} restrict={res:<7} {'pass' if ok else 'fail'}")

print("classes per degree:", [len(hopf.basis_classes(hopf.LAGRANGIAN, n)) for n in range(5)])
