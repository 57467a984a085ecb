"""
The symplectic space ``V_E`` over GF(2) and its Lagrangian subspaces.

For a ground set ``E = (e_0, ..., e_{n-1})`` a vector of ``V_E`` is packed
into an int of ``2n`` bits: bit ``i`` is the coordinate of ``e_i`` and bit
``n + i`` the coordinate of the dual element ``e_i^``.  The form pairs
``e_i`` with ``e_i^`` and nothing else.

Lagrangian subspaces are stored by their reduced row-echelon basis, which is
unique for a given span; equality of values is therefore equality of spans.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from . import gf2
from .gf2 import BitMatrix

# Re-check isotropy and dimension of every constructed subspace.  Enabled by
# the test suite; costs a quadratic number of pairings per construction.
CHECK_INVARIANTS = os.environ.get("DELTALAG_CHECK", "") not in ("", "0")

MAX_ENUMERATION_SIZE = 5


class NotIsotropic(ValueError):
    pass


class WrongDimension(ValueError):
    pass


class NotGraphic(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class GroundSetTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class GroundSet:
    """Ordered distinct labels; the order fixes the coordinate order of ``V_E``."""

    labels: tuple[Hashable, ...]

    def __init__(self, labels: Iterable[Hashable] = ()):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"ground set labels must be distinct: {labels!r}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def range(cls, n: int, start: int = 1) -> "GroundSet":
        return cls(range(start, start + n))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def index(self, label: Hashable) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not in the ground set {self.labels!r}") from None

    def mask(self, subset: Iterable[Hashable]) -> int:
        """Bitmask of a subset given by labels."""
        m = 0
        for lab in subset:
            m |= 1 << self.index(lab)
        return m

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def subset(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in gf2.bits(mask))

    def sub(self, mask: int) -> "GroundSet":
        """The ground set restricted to ``mask``, order kept."""
        return GroundSet(self.labels[i] for i in gf2.bits(mask))

    def isdisjoint(self, other: "GroundSet") -> bool:
        return not set(self.labels) & set(other.labels)

    def __add__(self, other: "GroundSet") -> "GroundSet":
        return GroundSet(self.labels + other.labels)


def primal(ground: GroundSet, label) -> int:
    """The basis vector ``e`` of ``V_E``."""
    return 1 << ground.index(label)


def dual(ground: GroundSet, label) -> int:
    """The basis vector ``e^`` of ``V_E``."""
    return 1 << (len(ground) + ground.index(label))


def pairing(u: int, v: int, n: int) -> int:
    low = (1 << n) - 1
    return gf2.parity((u & low) & (v >> n)) ^ gf2.parity((u >> n) & (v & low))


def symplectic_form(ground: GroundSet, u: int, v: int) -> int:
    n = len(ground)
    if u >> (2 * n) or v >> (2 * n):
        raise ValueError(f"vectors do not belong to V_E with |E| = {n}")
    return pairing(u, v, n)


def swap_blocks(v: int, s: int, n: int) -> int:
    """Exchange coordinates ``e <-> e^`` for every ``e`` in the mask ``s``."""
    lo = v & s
    hi = (v >> n) & s
    return (v & ~(s | (s << n))) | (lo << n) | hi


@dataclass(frozen=True)
class LagrangianSubspace:
    """A Lagrangian subspace of ``V_E`` held by its canonical echelon basis.

    Build values with :func:`make_lagrangian`; the raw constructor trusts
    its arguments.
    """

    ground: GroundSet
    basis: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.ground)

    def basis_matrix(self) -> BitMatrix:
        cols = tuple(self.ground.labels) + tuple(f"{lab}^" for lab in self.ground.labels)
        return BitMatrix(self.basis, 2 * self.n, None, cols)

    def elements(self) -> list[int]:
        return gf2.span_elements(self.basis)

    def __contains__(self, v: int) -> bool:
        return gf2.in_span(v, self.basis)

    def __str__(self) -> str:
        from .textio import format_vector

        return "<" + ", ".join(format_vector(self.ground, v) for v in self.basis) + ">"


def is_isotropic(rows: Sequence[int], n: int) -> bool:
    return all(pairing(a, b, n) == 0 for a, b in combinations(rows, 2))


def _trusted(ground: GroundSet, rows: Iterable[int]) -> LagrangianSubspace:
    basis, _ = gf2.echelon(rows)
    l = LagrangianSubspace(ground, tuple(basis))
    if CHECK_INVARIANTS:
        _assert_lagrangian(l)
    return l


def _assert_lagrangian(l: LagrangianSubspace) -> None:
    n = l.n
    assert len(l.basis) == n, f"dimension {len(l.basis)} != {n}"
    assert gf2.rank_rows(l.basis) == n
    assert is_isotropic(l.basis, n), "basis is not isotropic"
    assert tuple(gf2.echelon(l.basis)[0]) == l.basis, "basis not canonical"


def make_lagrangian(ground: GroundSet, spanning: Iterable[int]) -> LagrangianSubspace:
    """Canonical Lagrangian subspace spanned by ``spanning``.

    Raises :class:`NotIsotropic` if two spanning vectors pair to 1 and
    :class:`WrongDimension` if the span does not have dimension ``|E|``.
    """
    n = len(ground)
    spanning = list(spanning)
    for v in spanning:
        if v < 0 or v >> (2 * n):
            raise ValueError(f"vector {v:b} is not in V_E with |E| = {n}")
    for a, b in combinations(spanning, 2):
        if pairing(a, b, n):
            raise NotIsotropic("spanning vectors pair nontrivially")
    basis, _ = gf2.echelon(spanning)
    if len(basis) != n:
        raise WrongDimension(f"span has dimension {len(basis)}, expected {n}")
    return LagrangianSubspace(ground, tuple(basis))


def zero_space() -> LagrangianSubspace:
    """The only Lagrangian subspace of ``V_{}``."""
    return LagrangianSubspace(GroundSet(), ())


def local_dual(l: LagrangianSubspace, subset: Iterable[Hashable]) -> LagrangianSubspace:
    return local_dual_mask(l, l.ground.mask(subset))


def local_dual_mask(l: LagrangianSubspace, s: int) -> LagrangianSubspace:
    if s == 0:
        return l
    n = l.n
    return _trusted(l.ground, (swap_blocks(v, s, n) for v in l.basis))


def graphic_basis(l: LagrangianSubspace) -> tuple[int, ...] | None:
    """The vectors ``v_e`` witnessing that ``l`` is graphic, or ``None``.

    ``v_e`` is the unique vector of ``l`` whose dual block is exactly ``e^``.
    """
    n = l.n
    full = (1 << n) - 1
    swapped, pivots = gf2.echelon(swap_blocks(v, full, n) for v in l.basis)
    if pivots != list(range(n)):
        return None
    return tuple(swap_blocks(v, full, n) for v in swapped)


def is_graphic(l: LagrangianSubspace) -> bool:
    return graphic_basis(l) is not None


def graphic_matrix(l: LagrangianSubspace) -> BitMatrix:
    """Symmetric matrix with entry ``(v_e, e'^)`` in row ``e``, column ``e'``."""
    vs = graphic_basis(l)
    if vs is None:
        raise NotGraphic(f"{l} is not graphic")
    low = (1 << l.n) - 1
    labels = l.ground.labels
    return BitMatrix(tuple(v & low for v in vs), l.n, labels, labels)


def from_symmetric_matrix(ground: GroundSet, a: BitMatrix) -> LagrangianSubspace:
    """Graphic subspace spanned by ``v_e = e^ + sum_e' a[e, e'] e'``."""
    n = len(ground)
    if a.shape != (n, n):
        raise ValueError(f"matrix shape {a.shape} does not match |E| = {n}")
    if not a.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    return _trusted(ground, ((1 << (n + i)) | r for i, r in enumerate(a.rows)))


def graphify(l: LagrangianSubspace) -> frozenset:
    """A subset ``E'`` with ``local_dual(l, E')`` graphic.

    Standard basis vectors ``e_1..e_n, e_1^..e_n^`` are scanned in order.  A
    basis vector ``b`` is selected when the part of ``l`` orthogonal to all
    previously selected vectors still contains some ``v`` with ``(b, v) = 1``;
    that part is then cut down to ``v``'s orthogonal companions.  ``E'``
    consists of the selected dual vectors.
    """
    return l.ground.subset(graphify_mask(l))


def graphify_mask(l: LagrangianSubspace) -> int:
    n = l.n
    remaining = list(l.basis)
    chosen_dual = 0
    for b in range(2 * n):
        if not remaining:
            break
        partner = 1 << (b + n if b < n else b - n)
        candidates = [v for v in remaining if v & partner]
        if not candidates:
            continue
        # rows are in pivot order, so the first candidate has the smallest pivot
        v = candidates[0]
        remaining = [r ^ v if r & partner else r for r in remaining if r != v]
        remaining, _ = gf2.echelon(remaining)
        if b >= n:
            chosen_dual |= 1 << (b - n)
    return chosen_dual


def _cell_solutions(pivot: int, later_free: list[int], prev: list[int], n: int) -> list[int]:
    """Rows with the given pivot, free bits in ``later_free``, isotropic to ``prev``."""
    nvar = len(later_free)
    # one equation per previous row: sum_j x_j (e_j, r) = (e_pivot, r)
    eqs = []
    for r in prev:
        coeffs = gf2.mask_of(k for k, j in enumerate(later_free) if pairing(1 << j, r, n))
        rhs = pairing(1 << pivot, r, n)
        eqs.append(coeffs | (rhs << nvar))
    basis, pivots = gf2.echelon(eqs)
    if pivots and pivots[-1] == nvar:
        return []
    particular = 0
    for row, p in zip(basis, pivots):
        if (row >> nvar) & 1:
            particular |= 1 << p
    homog = gf2.kernel(BitMatrix(tuple(r & ((1 << nvar) - 1) for r in basis), nvar))
    out = []
    for x in gf2.span_elements(homog):
        x ^= particular
        out.append((1 << pivot) | gf2.scatter(x, later_free))
    out.sort()
    return out


def enumerate_lagrangians(ground: GroundSet) -> Iterator[LagrangianSubspace]:
    """Every Lagrangian subspace of ``V_E`` once.

    Ordered by pivot columns (lexicographic), then by basis rows.  Rows are
    filled in pivot order; each new row ranges over the affine space of
    echelon-shaped vectors isotropic to the rows already chosen.
    """
    n = len(ground)
    if n > MAX_ENUMERATION_SIZE:
        raise GroundSetTooLarge(f"|E| = {n} exceeds {MAX_ENUMERATION_SIZE}")
    for pivots in combinations(range(2 * n), n):
        pivot_set = set(pivots)
        frees = [[j for j in range(p + 1, 2 * n) if j not in pivot_set] for p in pivots]

        def extend(k: int, prev: list[int]):
            if k == n:
                yield LagrangianSubspace(ground, tuple(prev))
                return
            for row in _cell_solutions(pivots[k], frees[k], prev, n):
                yield from extend(k + 1, prev + [row])

        yield from extend(0, [])


def count_lagrangians(n: int) -> int:
    """Closed form ``prod_{i=1..n} (2^i + 1)``."""
    out = 1
    for i in range(1, n + 1):
        out *= 2**i + 1
    return out


def _subspace_zero_on(rows: Sequence[int], mask: int) -> list[int]:
    """Basis of the vectors of ``span(rows)`` vanishing on the coordinates in ``mask``."""
    pivots: dict[int, tuple[int, int]] = {}
    out = []
    for r in rows:
        key, full = r & mask, r
        while key:
            top = key.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (key, full)
                break
            key ^= hit[0]
            full ^= hit[1]
        if not key:
            out.append(full)
    return out


REDUCTIONS = ("undualized", "dualized")


def reduce(l: LagrangianSubspace, subset: Iterable[Hashable], coisotropic: str = "undualized") -> LagrangianSubspace:
    """Symplectic reduction of ``l`` to the ground set ``subset``.

    With ``coisotropic="undualized"`` the reduction uses ``W^perp`` spanned by
    the discarded elements ``E \\ I``: intersect ``l`` with ``W`` (vectors with
    no ``(E \\ I)^`` component) and drop the coordinates of ``E \\ I`` and
    ``(E \\ I)^``.  ``"dualized"`` uses ``W^perp`` spanned by ``(E \\ I)^``.
    """
    return reduce_mask(l, l.ground.mask(subset), coisotropic)


def reduce_mask(l: LagrangianSubspace, keep: int, coisotropic: str = "undualized") -> LagrangianSubspace:
    n = l.n
    drop = l.ground.full & ~keep
    if coisotropic == "undualized":
        zero = drop << n
    elif coisotropic == "dualized":
        zero = drop
    else:
        raise ValueError(f"unknown coisotropic choice {coisotropic!r}")
    inter = _subspace_zero_on(l.basis, zero)
    idx = list(gf2.bits(keep))
    positions = idx + [n + i for i in idx]
    return _trusted(l.ground.sub(keep), (gf2.compress(v, positions) for v in inter))


def direct_sum(a: LagrangianSubspace, b: LagrangianSubspace) -> LagrangianSubspace:
    """``a + b`` inside ``V_{E_a} + V_{E_b}``; ground labels must be disjoint."""
    if not a.ground.isdisjoint(b.ground):
        raise ValueError("ground sets overlap")
    na, nb = a.n, b.n
    n = na + nb
    lo_a, lo_b = (1 << na) - 1, (1 << nb) - 1

    def lift_a(v):
        return (v & lo_a) | ((v >> na) << n)

    def lift_b(v):
        return ((v & lo_b) << na) | ((v >> nb) << (n + na))

    return _trusted(a.ground + b.ground, [lift_a(v) for v in a.basis] + [lift_b(v) for v in b.basis])


def relabel(l: LagrangianSubspace, perm: Sequence[int], ground: GroundSet | None = None) -> LagrangianSubspace:
    """Move coordinate ``i`` to ``perm[i]`` in both blocks."""
    n = l.n
    positions = list(perm) + [n + p for p in perm]
    rows = (gf2.scatter(v, positions) for v in l.basis)
    if ground is None:
        ground = l.ground
    return _trusted(ground, rows)


# -- Vassiliev moves -------------------------------------------------------


@dataclass(frozen=True)
class VassilievMove:
    kind: str
    pair: tuple[Hashable, Hashable]

    def __post_init__(self):
        if self.kind not in ("first", "second"):
            raise ValueError(f"move kind must be 'first' or 'second', not {self.kind!r}")
        if len(self.pair) != 2 or self.pair[0] == self.pair[1]:
            raise ValueError(f"a move needs two distinct elements, got {self.pair!r}")


def _images_to_matrix(images: Sequence[int], dim: int) -> BitMatrix:
    # column j holds the image of basis vector j
    rows = tuple(gf2.mask_of(j for j, im in enumerate(images) if (im >> i) & 1) for i in range(dim))
    return BitMatrix(rows, dim)


def twist_matrix(ground: GroundSet, subset: Iterable[Hashable]) -> BitMatrix:
    n = len(ground)
    s = ground.mask(subset)
    return _images_to_matrix([swap_blocks(1 << j, s, n) for j in range(2 * n)], 2 * n)


def move_matrix(ground: GroundSet, move: VassilievMove) -> BitMatrix:
    """The ``2|E| x 2|E|`` matrix of ``move`` acting on column vectors.

    First move: ``e^ -> e^ + e'`` and ``e'^ -> e'^ + e``, identity elsewhere.
    Second move: the first move conjugated by the twist at ``e'``.
    """
    n = len(ground)
    i, j = (ground.index(x) for x in move.pair)
    images = [1 << k for k in range(2 * n)]
    images[n + i] |= 1 << j
    images[n + j] |= 1 << i
    first = _images_to_matrix(images, 2 * n)
    if move.kind == "first":
        return first
    t = twist_matrix(ground, [move.pair[1]])
    return gf2.matmul(gf2.matmul(t, first), t)


def apply_matrix(l: LagrangianSubspace, m: BitMatrix) -> LagrangianSubspace:
    return _trusted(l.ground, (gf2.apply_columns(m, v) for v in l.basis))


def apply_move(l: LagrangianSubspace, move: VassilievMove) -> LagrangianSubspace:
    for x in move.pair:
        l.ground.index(x)
    return apply_matrix(l, move_matrix(l.ground, move))
