"""
The bijection between Lagrangian subspaces of ``V_E`` and binary
delta-matroids on ``E``.

``nu`` follows the definition directly: ``Y`` is feasible when ``L`` meets
the coordinate subspace spanned by ``Y^`` and ``E \\ Y`` only in zero.
``nu_inverse`` goes through the graphic normal form instead, so the two
directions are computed independently.
"""

from __future__ import annotations

from typing import Hashable

from . import gf2
from .deltamatroid import (
    FramedGraph,
    ImproperSystem,
    SetSystem,
    nondegeneracy_dm,
    reconstruct_matrix,
    twist_mask,
)
from .symplectic import LagrangianSubspace, from_symmetric_matrix, local_dual, local_dual_mask


class NotBinary(ValueError):
    pass


def feasible_mask(l: LagrangianSubspace, y: int) -> bool:
    """Whether ``l`` meets ``<Y^, E \\ Y>`` trivially.

    Equivalent to ``l`` projecting injectively onto the complementary
    coordinates ``Y`` and ``(E \\ Y)^``.
    """
    n = l.n
    keep = y | ((l.ground.full & ~y) << n)
    return gf2.rank_rows(v & keep for v in l.basis) == n


def nu(l: LagrangianSubspace) -> SetSystem:
    return SetSystem(l.ground, tuple(y for y in range(1 << l.n) if feasible_mask(l, y)))


def nu_inverse(s: SetSystem, phi: int | None = None) -> LagrangianSubspace:
    """The Lagrangian subspace ``L`` with ``nu(L) == s``.

    Twists ``s`` by a feasible set ``phi`` (by default the one with the
    smallest bitmask) so that the empty set is feasible, rebuilds the framed
    graph, and undoes the twist by local duality.
    """
    if not s.proper:
        raise ImproperSystem("nu_inverse needs a proper set system")
    if phi is None:
        phi = s.feasible[0]
    elif not s.has_mask(phi):
        raise ValueError("phi must be feasible")
    shifted = twist_mask(s, phi)
    a = reconstruct_matrix(shifted)
    if nondegeneracy_dm(FramedGraph(a)) != shifted:
        raise NotBinary(f"{s!r} is not a binary delta-matroid")
    return local_dual_mask(from_symmetric_matrix(s.ground, a), phi)


def check_twist_equivariance(l: LagrangianSubspace, e: Hashable) -> bool:
    """``nu(l * e) == nu(l) * e``."""
    m = l.ground.mask([e])
    return nu(local_dual(l, [e])) == twist_mask(nu(l), m)


def graphic_bridge(g: FramedGraph) -> tuple[LagrangianSubspace, SetSystem]:
    """The graphic subspace and the non-degeneracy system of one framed graph."""
    ground = g.vertices
    return from_symmetric_matrix(ground, g.adjacency), nondegeneracy_dm(g)
