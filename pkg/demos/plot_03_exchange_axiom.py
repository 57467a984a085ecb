"""
Framed graphs and the symmetric exchange axiom
==============================================
"""

from collections import Counter

from deltalag import deltamatroid as dm
from deltalag.symplectic import GroundSet
from deltalag.textio import format_family

# The path 1 - 2 - 3 with vertex 3 framed.
G = dm.FramedGraph.from_edges([1, 2, 3], [(1, 2), (2, 3)], framed=[3])
D = dm.nondegeneracy_dm(G)
print("non-degenerate sets:", format_family(D))
print("twist by {1}:      ", format_family(dm.twist(D, [1])))

###############################################################################
# A system that is not a delta-matroid, with the witness the checker finds.

bad = dm.SetSystem.from_sets([1, 2, 3], [[], [1, 2, 3]])
print("witness:", dm.sea_counterexample(bad))

###############################################################################
# Every twist of every framed graph on four vertices passes.

sizes = Counter()
for g in dm.enumerate_framed_graphs(GroundSet.range(4)):
    base = dm.nondegeneracy_dm(g)
    for t in range(16):
        s = dm.twist_mask(base, t)
        assert dm.check_sea(s)
        sizes[len(s)] += 1
print("family sizes over 16384 systems:", dict(sorted(sizes.items())))
