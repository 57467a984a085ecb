"""
Lagrangian subspaces of symplectic GF(2)-spaces, binary delta-matroids,
ribbon graphs, and the Hopf algebras they span.
"""

from .correspondence import check_twist_equivariance, graphic_bridge, nu, nu_inverse
from .deltamatroid import (
    DeltaMatroid,
    FramedGraph,
    SetSystem,
    canonical_form,
    check_sea,
    direct_sum,
    is_binary,
    nondegeneracy_dm,
    restrict,
    sym_diff,
    twist,
)
from .gf2 import BitMatrix, det, kernel, principal_submatrix, rank
from .ribbon import RibbonGraph, boundary_components, intersection_graph, partial_dual, pi, rho, spanning_subgraph
from .symplectic import (
    GroundSet,
    LagrangianSubspace,
    VassilievMove,
    apply_move,
    enumerate_lagrangians,
    from_symmetric_matrix,
    graphic_matrix,
    graphify,
    is_graphic,
    local_dual,
    make_lagrangian,
    reduce,
    symplectic_form,
)

__version__ = "0.1.0"
