"""Small builders shared by the test modules."""

from deltalag.deltamatroid import SetSystem
from deltalag.symplectic import GroundSet, dual, make_lagrangian, primal


def vec(ground, text):
    """``"1^+2"`` style vector over ``ground``."""
    v = 0
    for tok in text.split("+"):
        if tok.endswith("^"):
            v ^= dual(ground, int(tok[:-1]))
        else:
            v ^= primal(ground, int(tok))
    return v


def lag(n, *vectors):
    g = GroundSet.range(n)
    return make_lagrangian(g, [vec(g, t) for t in vectors])


def system(n, *sets):
    return SetSystem.from_sets(range(1, n + 1), sets)
