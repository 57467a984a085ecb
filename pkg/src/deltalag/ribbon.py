"""
Ribbon graphs as signed rotation systems.

Half-edges are numbered ``0 .. 2m-1``.  Each vertex carries the cyclic order
of its half-edges, each edge pairs two half-edges and carries a label and a
twist bit.

Boundaries are traced on the attaching segments.  Half-edge ``h`` owns two
points, ``L(h) = 2h`` and ``R(h) = 2h+1``; walking a vertex boundary in
rotation order passes ``L(h)`` then ``R(h)``.  Corners join ``R(h)`` to
``L(next(h))``.  A ribbon on ends ``a, b`` has free sides ``L(a)-R(b)``,
``R(a)-L(b)`` if untwisted and ``L(a)-L(b)``, ``R(a)-R(b)`` if twisted.
Every point then has one corner link and one other link, and the boundary
is a disjoint union of cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Hashable, Iterable, Iterator, Sequence

from . import gf2, symplectic
from .deltamatroid import FramedGraph, SetSystem, check_sea
from .gf2 import BitMatrix
from .symplectic import GroundSet, LagrangianSubspace, from_symmetric_matrix, local_dual_mask, zero_space


class DisconnectedGraph(ValueError):
    pass


class MultipleVertices(ValueError):
    pass


class NoSingleVertexDual(AssertionError):
    pass


def _rotate_to_min(cycle: Sequence[int]) -> tuple[int, ...]:
    if not cycle:
        return ()
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


@dataclass(frozen=True)
class Edge:
    label: Hashable
    a: int
    b: int
    twisted: int = 0


@dataclass(frozen=True)
class RibbonGraph:
    """A ribbon graph, normalized so that equal structures compare equal.

    Rotations are rotated to start at their smallest half-edge and sorted;
    vertices without half-edges come last.  Edge order is kept since it fixes
    the order of the ground set.
    """

    rotations: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    def __init__(self, rotations: Iterable[Sequence[int]], edges: Iterable):
        rots = [_rotate_to_min(list(r)) for r in rotations]
        rots = sorted((r for r in rots if r), key=lambda r: r[0]) + [r for r in rots if not r]
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            a, b = sorted((e.a, e.b))
            es.append(Edge(e.label, a, b, int(e.twisted) & 1))
        object.__setattr__(self, "rotations", tuple(rots))
        object.__setattr__(self, "edges", tuple(es))
        self._validate()

    def _validate(self):
        m = len(self.edges)
        seen = sorted(h for r in self.rotations for h in r)
        if seen != list(range(2 * m)):
            raise ValueError("rotations must use each half-edge 0..2m-1 exactly once")
        ends = sorted(h for e in self.edges for h in (e.a, e.b))
        if ends != list(range(2 * m)):
            raise ValueError("edges must pair the half-edges perfectly")
        labels = [e.label for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("edge labels must be distinct")

    @classmethod
    def one_vertex(cls, word: Sequence[Hashable], twisted: Iterable[Hashable] = ()) -> "RibbonGraph":
        """Chord diagram read off a cyclic word in which every label occurs twice."""
        twisted = set(twisted)
        pos: dict = {}
        for i, lab in enumerate(word):
            pos.setdefault(lab, []).append(i)
        if any(len(p) != 2 for p in pos.values()):
            raise ValueError("every label must occur exactly twice")
        edges = [Edge(lab, p[0], p[1], int(lab in twisted)) for lab, p in pos.items()]
        return cls([list(range(len(word)))], edges)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(e.label for e in self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertex_of(self) -> list[int]:
        out = [0] * (2 * self.num_edges)
        for v, rot in enumerate(self.rotations):
            for h in rot:
                out[h] = v
        return out

    def is_connected(self) -> bool:
        nv = self.num_vertices
        if nv == 0:
            return True
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        vert = self.vertex_of()
        for e in self.edges:
            parent[find(vert[e.a])] = find(vert[e.b])
        return len({find(v) for v in range(nv)}) == 1

    def is_orientable(self) -> bool:
        """Whether vertex flips can make every edge untwisted."""
        side = {}
        vert = self.vertex_of()
        adj: dict[int, list] = {v: [] for v in range(self.num_vertices)}
        for e in self.edges:
            adj[vert[e.a]].append((vert[e.b], e.twisted))
            adj[vert[e.b]].append((vert[e.a], e.twisted))
        for root in range(self.num_vertices):
            if root in side:
                continue
            side[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for w, t in adj[v]:
                    want = side[v] ^ t
                    if w not in side:
                        side[w] = want
                        stack.append(w)
                    elif side[w] != want:
                        return False
        return True


def _links(g: RibbonGraph, inside: int) -> tuple[list[int], list[int]]:
    """Corner and non-corner partner of every point, edges in ``inside`` present."""
    npts = 4 * g.num_edges
    corner = [0] * npts
    other = [0] * npts
    for rot in g.rotations:
        k = len(rot)
        for i, h in enumerate(rot):
            nxt = rot[(i + 1) % k]
            corner[2 * h + 1] = 2 * nxt
            corner[2 * nxt] = 2 * h + 1
    for idx, e in enumerate(g.edges):
        la, ra, lb, rb = 2 * e.a, 2 * e.a + 1, 2 * e.b, 2 * e.b + 1
        if (inside >> idx) & 1:
            pairs = ((la, lb), (ra, rb)) if e.twisted else ((la, rb), (ra, lb))
        else:
            pairs = ((la, ra), (lb, rb))
        for p, q in pairs:
            other[p] = q
            other[q] = p
    return corner, other


def _cycles(g: RibbonGraph, inside: int) -> list[list[tuple[int, int]]]:
    """Boundary cycles of the subsurface made of all vertices and the edges in ``inside``.

    Each cycle is the list of its non-corner links ``(start, end)`` in walking
    order, starting from its smallest point.
    """
    corner, other = _links(g, inside)
    seen = [False] * len(corner)
    out = []
    for s in range(len(corner)):
        if seen[s]:
            continue
        cyc = []
        p = s
        while True:
            q = other[p]
            seen[p] = seen[q] = True
            cyc.append((p, q))
            p = corner[q]
            if p == s:
                break
        out.append(cyc)
    return out


def _isolated(g: RibbonGraph) -> int:
    return sum(1 for r in g.rotations if not r)


def boundary_components_mask(g: RibbonGraph, inside: int) -> int:
    return len(_cycles(g, inside)) + _isolated(g)


def boundary_components(g: RibbonGraph) -> int:
    """Number of boundary circles of the surface of ``g``."""
    return boundary_components_mask(g, (1 << g.num_edges) - 1)


def spanning_subgraph(g: RibbonGraph, subset: Iterable[Hashable]) -> RibbonGraph:
    """Keep every vertex and only the edges labelled by ``subset``; half-edges renumbered in order."""
    keep = g.ground.mask(subset)
    return spanning_subgraph_mask(g, keep)


def spanning_subgraph_mask(g: RibbonGraph, keep: int) -> RibbonGraph:
    kept = [e for i, e in enumerate(g.edges) if (keep >> i) & 1]
    alive = sorted(h for e in kept for h in (e.a, e.b))
    new = {h: i for i, h in enumerate(alive)}
    rots = [[new[h] for h in r if h in new] for r in g.rotations]
    return RibbonGraph(rots, [Edge(e.label, new[e.a], new[e.b], e.twisted) for e in kept])


def rho(g: RibbonGraph) -> SetSystem:
    """Edge sets whose spanning subgraph has a single boundary component."""
    if not g.is_connected():
        raise DisconnectedGraph("rho needs a connected ribbon graph")
    m = g.num_edges
    out = SetSystem(g.ground, tuple(f for f in range(1 << m) if boundary_components_mask(g, f) == 1))
    if symplectic.CHECK_INVARIANTS and not check_sea(out):
        raise AssertionError(f"quasi-trees of {g} violate symmetric exchange")
    return out


def partial_dual(g: RibbonGraph, subset: Iterable[Hashable]) -> RibbonGraph:
    return partial_dual_mask(g, g.ground.mask(subset))


def partial_dual_mask(g: RibbonGraph, s: int) -> RibbonGraph:
    """Partial dual of ``g`` with respect to the edges in the mask ``s``.

    New vertices are the boundary cycles of the subsurface built from the
    vertices and the edges of ``s``.  Along a cycle, an end ``h`` of an edge
    outside ``s`` keeps its number; the two long sides of an edge of ``s`` on
    ends ``a, b`` become its new ends, the side through ``L(a)`` taking
    number ``a``.  Each new vertex is oriented by its walking direction.
    """
    side_id = {}
    for idx, e in enumerate(g.edges):
        la, ra, lb, rb = 2 * e.a, 2 * e.a + 1, 2 * e.b, 2 * e.b + 1
        if (s >> idx) & 1:
            if e.twisted:
                side_id[frozenset((la, lb))] = e.a
                side_id[frozenset((ra, rb))] = e.b
            else:
                side_id[frozenset((la, rb))] = e.a
                side_id[frozenset((ra, lb))] = e.b
        else:
            side_id[frozenset((la, ra))] = e.a
            side_id[frozenset((lb, rb))] = e.b

    rotations = []
    start = {}
    end = {}
    for cyc in _cycles(g, s):
        rot = []
        for p, q in cyc:
            h = side_id[frozenset((p, q))]
            rot.append(h)
            start[h], end[h] = p, q
        rotations.append(rot)
    rotations += [[] for _ in range(_isolated(g))]

    edges = []
    for idx, e in enumerate(g.edges):
        la, ra, lb, rb = 2 * e.a, 2 * e.a + 1, 2 * e.b, 2 * e.b + 1
        if (s >> idx) & 1:
            # the old attaching segments become the free sides
            free = {la: ra, ra: la, lb: rb, rb: lb}
        elif e.twisted:
            free = {la: lb, lb: la, ra: rb, rb: ra}
        else:
            free = {la: rb, rb: la, ra: lb, lb: ra}
        twisted = int(free[start[e.a]] != end[e.b])
        edges.append(Edge(e.label, e.a, e.b, twisted))
    return RibbonGraph(rotations, edges)


def intersection_graph(d: RibbonGraph) -> FramedGraph:
    """Interlacement graph of a one-vertex ribbon graph; framing is the twist bit."""
    if d.num_vertices != 1:
        raise MultipleVertices(f"expected one vertex, found {d.num_vertices}")
    pos = {h: i for i, h in enumerate(d.rotations[0])}
    spans = [tuple(sorted((pos[e.a], pos[e.b]))) for e in d.edges]
    m = d.num_edges
    rows = [0] * m
    for i in range(m):
        if d.edges[i].twisted:
            rows[i] |= 1 << i
        a, b = spans[i]
        for j in range(i + 1, m):
            c, dd = spans[j]
            if (a < c < b) != (a < dd < b):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    labels = d.ground.labels
    return FramedGraph(BitMatrix(tuple(rows), m, labels, labels))


def single_vertex_duals(g: RibbonGraph) -> Iterator[int]:
    """Masks ``s`` with ``partial_dual(g, s)`` one-vertex: smallest first, then by index order."""
    m = g.num_edges
    for k in range(m + 1):
        for combo in combinations(range(m), k):
            s = gf2.mask_of(combo)
            if len(_cycles(g, s)) + _isolated(g) == 1:
                yield s


def pi(g: RibbonGraph) -> LagrangianSubspace:
    """Lagrangian subspace of a connected ribbon graph.

    A one-vertex graph gives the graphic subspace of its interlacement
    matrix.  Otherwise ``g`` is dualized along the first edge set making it
    one-vertex, and that duality is undone on the subspace.
    """
    if not g.is_connected():
        raise DisconnectedGraph("pi needs a connected ribbon graph")
    if g.num_vertices == 1:
        if g.num_edges == 0:
            return zero_space()
        return from_symmetric_matrix(g.ground, intersection_graph(g).adjacency)
    for s in single_vertex_duals(g):
        return local_dual_mask(pi(partial_dual_mask(g, s)), s)
    raise NoSingleVertexDual("a connected ribbon graph always has a spanning quasi-tree")


# -- isomorphism and corpus -----------------------------------------------


def _signature(g: RibbonGraph, flips: int, swaps: int, index: dict):
    # ``index`` numbers the edge labels so that edge order does not matter
    tag = {}
    twist = {}
    for i, e in enumerate(g.edges):
        sw = (swaps >> i) & 1
        tag[e.a] = (index[e.label], sw)
        tag[e.b] = (index[e.label], 1 - sw)
        twist[index[e.label]] = e.twisted
    vert = g.vertex_of()
    words = []
    for v, rot in enumerate(g.rotations):
        seq = list(rot[::-1]) if (flips >> v) & 1 else list(rot)
        word = [tag[h] for h in seq]
        words.append(min(tuple(word[k:] + word[:k]) for k in range(len(word))) if word else ())
    for e in g.edges:
        twist[index[e.label]] ^= ((flips >> vert[e.a]) & 1) ^ ((flips >> vert[e.b]) & 1)
    return tuple(sorted(words)), tuple(twist[i] for i in range(len(g.edges)))


def is_isomorphic(g: RibbonGraph, h: RibbonGraph) -> bool:
    """Label-preserving isomorphism, allowing vertex flips and end swaps.

    Brute force over ``2^(v+m)`` choices; meant for small test graphs.
    """
    if set(g.ground.labels) != set(h.ground.labels) or g.num_vertices != h.num_vertices:
        return False
    index = {lab: i for i, lab in enumerate(h.ground.labels)}
    target = _signature(h, 0, 0, index)
    return any(
        _signature(g, f, s, index) == target
        for f in range(1 << g.num_vertices)
        for s in range(1 << g.num_edges)
    )


def relabel_half_edges(g: RibbonGraph, perm: Sequence[int]) -> RibbonGraph:
    """Rename half-edge ``h`` to ``perm[h]``."""
    return RibbonGraph(
        [[perm[h] for h in r] for r in g.rotations],
        [Edge(e.label, perm[e.a], perm[e.b], e.twisted) for e in g.edges],
    )


def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1 :]
        for m in _matchings(rest):
            yield [(a, points[k])] + m


def one_vertex_corpus(max_edges: int, labels: Sequence[Hashable] | None = None) -> Iterator[RibbonGraph]:
    """Every one-vertex ribbon graph with at most ``max_edges`` edges, up to relabeling.

    Chords are labelled in order of their first end; all twist patterns.
    """
    for m in range(max_edges + 1):
        names = list(labels[:m]) if labels is not None else list(range(1, m + 1))
        for matching in _matchings(list(range(2 * m))):
            for twists in product((0, 1), repeat=m):
                edges = [Edge(names[i], a, b, t) for i, ((a, b), t) in enumerate(zip(matching, twists))]
                yield RibbonGraph([list(range(2 * m))], edges)


def euler_characteristic(g: RibbonGraph) -> int:
    """``v - e + f`` of the closed surface obtained by capping every boundary circle."""
    return g.num_vertices - g.num_edges + boundary_components(g)
