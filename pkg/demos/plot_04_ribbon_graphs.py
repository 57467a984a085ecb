"""
Quasi-trees and partial duals of ribbon graphs
==============================================
"""

from deltalag import ribbon as rb
from deltalag.correspondence import nu
from deltalag.textio import format_family, format_lagrangian_inline, format_ribbon

# Two interleaved chords on one vertex: a punctured torus.
T = rb.RibbonGraph.one_vertex([1, 2, 1, 2])
print("boundary components:", rb.boundary_components(T))
print("quasi-trees (rho):   ", format_family(rb.rho(T)))
print("pi:                  ", format_lagrangian_inline(rb.pi(T)))

###############################################################################
# Dualizing along edge 1 gives a two-vertex graph; the subspace is
# recovered by local duality and the quasi-trees are twisted.

D = rb.partial_dual(T, [1])
print(format_ribbon(D))
print("rho(T*1):", format_family(rb.rho(D)))
print("nu(pi(T*1)) == rho(T*1):", nu(rb.pi(D)) == rb.rho(D))

###############################################################################
# The whole corpus: all one-vertex graphs with up to three edges and all
# their partial duals.

total = bad = 0
for g in rb.one_vertex_corpus(3):
    for s in range(1 << g.num_edges):
        d = rb.partial_dual_mask(g, s)
        total += 1
        bad += nu(rb.pi(d)) != rb.rho(d)
print(f"{total} graphs, {bad} mismatches")
