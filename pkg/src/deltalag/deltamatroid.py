"""
Set systems, delta-matroids and binary delta-matroids.

Feasible subsets are bitmasks over the ground set order; ``SetSystem`` keeps
them deduplicated and sorted so that equal families compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Hashable, Iterable, Iterator, Sequence

from . import gf2
from .gf2 import BitMatrix
from .symplectic import GroundSet, GroundSetTooLarge

MAX_CANONICAL_SIZE = 8


class ImproperSystem(ValueError):
    pass


class NotDeltaMatroid(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SetSystem:
    ground: GroundSet
    feasible: tuple[int, ...]

    def __post_init__(self):
        fam = tuple(sorted(set(int(f) for f in self.feasible)))
        full = self.ground.full
        for f in fam:
            if f < 0 or f & ~full:
                raise ValueError(f"feasible set {f:b} is not a subset of the ground set")
        object.__setattr__(self, "feasible", fam)

    @classmethod
    def from_sets(cls, ground: Iterable[Hashable] | GroundSet, sets: Iterable[Iterable[Hashable]]) -> "SetSystem":
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        return cls(ground, tuple(ground.mask(s) for s in sets))

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground == other.ground and self.feasible == other.feasible

    def __hash__(self):
        return hash((self.ground, self.feasible))

    def __len__(self) -> int:
        return len(self.feasible)

    def __contains__(self, subset) -> bool:
        return self.ground.mask(subset) in self._feasible_set

    @property
    def _feasible_set(self) -> frozenset:
        cached = self.__dict__.get("_fs")
        if cached is None:
            cached = frozenset(self.feasible)
            object.__setattr__(self, "_fs", cached)
        return cached

    def has_mask(self, mask: int) -> bool:
        return mask in self._feasible_set

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def proper(self) -> bool:
        return bool(self.feasible)

    def sets(self) -> list[frozenset]:
        return [self.ground.subset(f) for f in self.feasible]

    def __repr__(self) -> str:
        fam = ", ".join("{" + ",".join(str(x) for x in _ordered(self.ground, f)) + "}" for f in self.feasible)
        return f"{type(self).__name__}({list(self.ground.labels)}; [{fam}])"


def _ordered(ground: GroundSet, mask: int) -> list:
    return [ground.labels[i] for i in gf2.bits(mask)]


class DeltaMatroid(SetSystem):
    """A proper set system satisfying the symmetric exchange axiom."""

    def __post_init__(self):
        super().__post_init__()
        if not self.feasible:
            raise ImproperSystem("a delta-matroid needs at least one feasible set")
        bad = sea_counterexample(self)
        if bad is not None:
            raise NotDeltaMatroid(f"symmetric exchange fails at {bad!r}")


@dataclass(frozen=True)
class FramedGraph:
    """A simple graph with a 0/1 framing per vertex, held as its adjacency matrix.

    Off-diagonal entries are adjacencies, diagonal entries are framings.
    """

    adjacency: BitMatrix

    def __post_init__(self):
        if not self.adjacency.is_symmetric():
            raise ValueError("adjacency matrix of a framed graph must be symmetric")

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable[tuple], framed: Iterable[Hashable] = ()) -> "FramedGraph":
        ground = GroundSet(vertices)
        n = len(ground)
        rows = [0] * n
        for u, v in edges:
            i, j = ground.index(u), ground.index(v)
            if i == j:
                raise ValueError("loops are encoded by framings, not edges")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        for v in framed:
            i = ground.index(v)
            rows[i] |= 1 << i
        return cls(BitMatrix(tuple(rows), n, ground.labels, ground.labels))

    @property
    def vertices(self) -> GroundSet:
        return GroundSet(self.adjacency.row_labels)

    def framing(self, v) -> int:
        i = self.vertices.index(v)
        return self.adjacency[i, i]


def sym_diff(a: frozenset | set, b: frozenset | set) -> frozenset:
    return frozenset(a) ^ frozenset(b)


def sea_counterexample(s: SetSystem) -> tuple[frozenset, frozenset, Hashable] | None:
    """First ``(phi1, phi2, e)`` violating symmetric exchange, or ``None``.

    Pairs are scanned in the stored order of feasible sets and ``e`` in
    ground order; ``e' = e`` is allowed.
    """
    if not s.proper:
        raise ImproperSystem("symmetric exchange is only checked on proper systems")
    feas = s._feasible_set
    for f1 in s.feasible:
        for f2 in s.feasible:
            d = f1 ^ f2
            for i in gf2.bits(d):
                bi = 1 << i
                if not any((f1 ^ bi ^ (1 << j) if j != i else f1 ^ bi) in feas for j in gf2.bits(d)):
                    return (s.ground.subset(f1), s.ground.subset(f2), s.ground.labels[i])
    return None


def check_sea(s: SetSystem) -> bool:
    return sea_counterexample(s) is None


def twist(s: SetSystem, subset: Iterable[Hashable]) -> SetSystem:
    return twist_mask(s, s.ground.mask(subset))


def twist_mask(s: SetSystem, t: int) -> SetSystem:
    return SetSystem(s.ground, tuple(f ^ t for f in s.feasible))


def nondegenerate_mask(a: BitMatrix, u: int) -> bool:
    idx = list(gf2.bits(u))
    return gf2.rank_rows(gf2.compress(a.rows[i], idx) for i in idx) == len(idx)


def nondegeneracy_dm(g: FramedGraph) -> SetSystem:
    """Vertex subsets inducing a nonsingular adjacency submatrix.

    Returned as a plain :class:`SetSystem`; it is always a delta-matroid.
    """
    a = g.adjacency
    ground = g.vertices
    return SetSystem(ground, tuple(u for u in range(1 << len(ground)) if nondegenerate_mask(a, u)))


def reconstruct_matrix(s: SetSystem) -> BitMatrix:
    """The only symmetric matrix whose non-degeneracy system could equal ``s``.

    Assumes ``{}`` is feasible.  The diagonal reads off feasible singletons;
    an off-diagonal entry ``x`` is fixed by ``det [[a, x], [x, b]] = ab + x``.
    """
    n = s.n
    diag = [int(s.has_mask(1 << i)) for i in range(n)]
    rows = [0] * n
    for i in range(n):
        if diag[i]:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if (diag[i] & diag[j]) ^ int(s.has_mask((1 << i) | (1 << j))):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return BitMatrix(tuple(rows), n, s.ground.labels, s.ground.labels)


def binary_witness(s: SetSystem) -> tuple[frozenset, FramedGraph] | None:
    """``(E', G)`` with ``s = twist(nondegeneracy_dm(G), E')``, or ``None``.

    ``E'`` is the feasible set with the smallest bitmask.
    """
    if not s.proper:
        raise ImproperSystem("binary test needs a proper set system")
    phi = s.feasible[0]
    shifted = twist_mask(s, phi)
    g = FramedGraph(reconstruct_matrix(shifted))
    if nondegeneracy_dm(g) != shifted:
        return None
    return s.ground.subset(phi), g


def is_binary(s: SetSystem) -> bool:
    return binary_witness(s) is not None


def enumerate_binary(ground: GroundSet) -> Iterator[SetSystem]:
    """All binary delta-matroids on ``ground``: every twist of every framed graph.

    Distinct results only, in order of first appearance.
    """
    n = len(ground)
    seen = set()
    for g in enumerate_framed_graphs(ground):
        base = nondegeneracy_dm(g)
        for t in range(1 << n):
            s = twist_mask(base, t)
            if s not in seen:
                seen.add(s)
                yield s


def enumerate_framed_graphs(ground: GroundSet) -> Iterator[FramedGraph]:
    n = len(ground)
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    for entries in product((0, 1), repeat=len(slots)):
        rows = [0] * n
        for (i, j), x in zip(slots, entries):
            if x:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield FramedGraph(BitMatrix(tuple(rows), n, ground.labels, ground.labels))


RESTRICTIONS = ("minimal", "naive")


def restrict(s: SetSystem, subset: Iterable[Hashable], mode: str = "minimal") -> SetSystem:
    """Restriction of ``s`` to ``subset`` (a system on ``subset``, order kept).

    ``naive`` keeps the feasible sets contained in ``subset`` and may come
    out improper.  ``minimal`` keeps ``phi & subset`` for the feasible ``phi``
    sticking out of ``subset`` by the fewest elements; it agrees with
    ``naive`` whenever that is proper.
    """
    return restrict_mask(s, s.ground.mask(subset), mode)


def restrict_mask(s: SetSystem, keep: int, mode: str = "minimal") -> SetSystem:
    out_mask = s.ground.full & ~keep
    if mode == "naive":
        chosen = [f for f in s.feasible if not f & out_mask]
    elif mode == "minimal":
        if not s.feasible:
            chosen = []
        else:
            k = min(gf2.popcount(f & out_mask) for f in s.feasible)
            chosen = [f for f in s.feasible if gf2.popcount(f & out_mask) == k]
    else:
        raise ValueError(f"unknown restriction mode {mode!r}")
    idx = list(gf2.bits(keep))
    return SetSystem(s.ground.sub(keep), tuple(gf2.compress(f, idx) for f in chosen))


def direct_sum(a: SetSystem, b: SetSystem) -> SetSystem:
    if not a.ground.isdisjoint(b.ground):
        raise ValueError("ground sets overlap; relabel one summand first")
    shift = a.n
    return SetSystem(a.ground + b.ground, tuple(fa | (fb << shift) for fa in a.feasible for fb in b.feasible))


def relabel(s: SetSystem, perm: Sequence[int], ground: GroundSet | None = None) -> SetSystem:
    """Move element ``i`` to position ``perm[i]``."""
    return SetSystem(ground or s.ground, tuple(gf2.scatter(f, perm) for f in s.feasible))


def canonical_form(s: SetSystem) -> tuple[bytes, tuple[int, ...]]:
    """Smallest encoding of the feasible family over all relabelings.

    The key is ``|E|`` followed by the sorted relabeled masks, one byte each;
    the permutation achieving it is returned alongside.
    """
    n = s.n
    if n > MAX_CANONICAL_SIZE:
        raise GroundSetTooLarge(f"|E| = {n} exceeds {MAX_CANONICAL_SIZE}")
    best = None
    best_perm = None
    for perm in permutations(range(n)):
        fam = sorted(gf2.scatter(f, perm) for f in s.feasible)
        if best is None or fam < best:
            best, best_perm = fam, perm
    return bytes([n, *best]), tuple(best_perm)


def canonical_key(s: SetSystem) -> bytes:
    return canonical_form(s)[0]
