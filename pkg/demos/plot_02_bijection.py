"""
Counting Lagrangian subspaces and binary delta-matroids
=======================================================

Both sides are enumerated independently and compared.
"""

import time

from deltalag import enumerate_lagrangians, nu
from deltalag.deltamatroid import enumerate_binary
from deltalag.symplectic import GroundSet, count_lagrangians, graphify, is_graphic, local_dual

for n in range(5):
    g = GroundSet.range(n)
    t = time.perf_counter()
    ls = list(enumerate_lagrangians(g))
    images = {nu(l) for l in ls}
    binary = set(enumerate_binary(g))
    print(
        f"n={n}: {len(ls):5d} subspaces (closed form {count_lagrangians(n)}), "
        f"{len(images)} images, {len(binary)} binary, equal={images == binary}, "
        f"{time.perf_counter() - t:.2f}s"
    )

###############################################################################
# Graphic subspaces are exactly those with the empty set feasible, and every
# subspace becomes graphic after local duality along ``graphify(L)``.

ls = list(enumerate_lagrangians(GroundSet.range(3)))
print("graphic at n=3:", sum(map(is_graphic, ls)), "= 2^6")
print("graphify always works:", all(is_graphic(local_dual(l, graphify(l))) for l in ls))
