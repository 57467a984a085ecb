"""
Graded Hopf algebras spanned by isomorphism classes of Lagrangian subspaces
and of binary delta-matroids, the map between them, and four-term relations.

Basis elements are :class:`IsoClassKey` values.  A key compares by its side,
degree and canonical bytes; it also carries a representative on the ground
set ``1..n``, which is what products and coproducts are computed on.
Coefficients are exact rationals.

Lagrangian classes are canonicalized on the Lagrangian side itself (smallest
echelon basis over all relabelings), so ``nu_hom`` is a genuine map between
two independently keyed bases.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Mapping

from . import deltamatroid as dm
from . import symplectic as sp
from .correspondence import nu, nu_inverse
from .qlinalg import rational_rank
from .symplectic import GroundSet, LagrangianSubspace, VassilievMove

LAGRANGIAN = "lagrangian"
DELTAMATROID = "deltamatroid"
SIDES = (LAGRANGIAN, DELTAMATROID)

# The combination under which nu is a coalgebra map; see README.
DEFAULT_REDUCTION = "undualized"
DEFAULT_RESTRICTION = "minimal"

MAX_DEGREE = 3
MAX_LAGRANGIAN_CANONICAL = 6

CONVENTIONS = {
    # [L] - [V1 L] - [V2 L] + [V1 V2 L]
    "inclusion-exclusion": (1, -1, -1, 1),
    # [L] - [V1 L] + [V2 L] - [V1 V2 L]
    "alternating": (1, -1, 1, -1),
}


class MixedSides(ValueError):
    pass


class DegreeTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class IsoClassKey:
    side: str
    degree: int
    key: bytes
    rep: object = field(compare=False, hash=False, repr=False, default=None)

    def __repr__(self) -> str:
        return f"{self.side[0]}{self.degree}:{self.key.hex()}"

    def __lt__(self, other: "IsoClassKey") -> bool:
        return (self.side, self.degree, self.key) < (other.side, other.degree, other.key)


def _standard(n: int) -> GroundSet:
    return GroundSet.range(n)


def lagrangian_canonical(l: LagrangianSubspace) -> tuple[bytes, tuple[int, ...]]:
    """Smallest echelon basis of ``l`` over all relabelings of its ground set."""
    n = l.n
    if n > MAX_LAGRANGIAN_CANONICAL:
        raise sp.GroundSetTooLarge(f"|E| = {n} exceeds {MAX_LAGRANGIAN_CANONICAL}")
    best = None
    best_perm = ()
    for perm in permutations(range(n)):
        basis = sp.relabel(l, perm).basis
        if best is None or basis < best:
            best, best_perm = basis, perm
    width = max(1, (2 * n + 7) // 8)
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in best), best_perm


@lru_cache(maxsize=None)
def lagrangian_class(l: LagrangianSubspace) -> IsoClassKey:
    key, perm = lagrangian_canonical(l)
    rep = LagrangianSubspace(_standard(l.n), sp.relabel(l, perm).basis)
    return IsoClassKey(LAGRANGIAN, l.n, key, rep)


@lru_cache(maxsize=None)
def dm_class(s: dm.SetSystem) -> IsoClassKey:
    key, perm = dm.canonical_form(s)
    rep = dm.relabel(s, perm, _standard(s.n))
    return IsoClassKey(DELTAMATROID, s.n, key, rep)


def class_of(obj) -> IsoClassKey:
    if isinstance(obj, LagrangianSubspace):
        return lagrangian_class(obj)
    if isinstance(obj, dm.SetSystem):
        return dm_class(obj)
    raise TypeError(f"no isomorphism class for {type(obj).__name__}")


class GradedElement:
    """Finite rational combination of isomorphism classes of one side."""

    __slots__ = ("side", "terms")

    def __init__(self, side: str, terms: Mapping[IsoClassKey, Fraction | int] | None = None):
        if side not in SIDES:
            raise ValueError(f"unknown side {side!r}")
        self.side = side
        clean: dict[IsoClassKey, Fraction] = {}
        for k, c in (terms or {}).items():
            if k.side != side:
                raise MixedSides(f"{k!r} does not live on the {side} side")
            c = Fraction(c)
            if c:
                clean[k] = clean.get(k, Fraction(0)) + c
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def basis(cls, key: IsoClassKey) -> "GradedElement":
        return cls(key.side, {key: 1})

    @classmethod
    def of(cls, obj) -> "GradedElement":
        return cls.basis(class_of(obj))

    @classmethod
    def unit(cls, side: str) -> "GradedElement":
        return cls.basis(unit_key(side))

    @classmethod
    def zero(cls, side: str) -> "GradedElement":
        return cls(side)

    def _check(self, other: "GradedElement"):
        if self.side != other.side:
            raise MixedSides(f"cannot combine {self.side} and {other.side} elements")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GradedElement(self.side, out)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.side, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "GradedElement":
        return GradedElement(self.side, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.side == other.side and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def degrees(self) -> set[int]:
        return {k.degree for k in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[{self.side}]"
        return " + ".join(f"{c}*{k!r}" for k, c in self.items())


class TensorElement:
    """Finite rational combination of tuples of classes (any number of factors)."""

    __slots__ = ("side", "terms")

    def __init__(self, side: str, terms: Mapping[tuple, Fraction | int] | None = None):
        self.side = side
        clean: dict[tuple, Fraction] = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[k] = clean.get(k, Fraction(0)) + c
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.side == other.side and self.terms == other.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.side, out)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Factorwise product ``(a1 x a2)(b1 x b2) = a1 b1 x a2 b2``."""
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                factors = [product_keys(x, y) for x, y in zip(ka, kb)]
                out[tuple(factors)] += ca * cb
        return TensorElement(self.side, out)

    def swap(self) -> "TensorElement":
        return TensorElement(self.side, {k[::-1]: c for k, c in self.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[{self.side} tensor]"
        return " + ".join(f"{c}*" + "(x)".join(map(repr, k)) for k, c in self.items())


def unit_key(side: str) -> IsoClassKey:
    if side == LAGRANGIAN:
        return lagrangian_class(sp.zero_space())
    return dm_class(dm.SetSystem(GroundSet(), (0,)))


# -- structure maps on basis classes ----------------------------------------


@lru_cache(maxsize=None)
def product_keys(x: IsoClassKey, y: IsoClassKey) -> IsoClassKey:
    if x.side != y.side:
        raise MixedSides("product of classes from different sides")
    shifted_ground = GroundSet.range(y.degree, x.degree + 1)
    if x.side == LAGRANGIAN:
        other = LagrangianSubspace(shifted_ground, y.rep.basis)
        return lagrangian_class(sp.direct_sum(x.rep, other))
    other = dm.SetSystem(shifted_ground, y.rep.feasible)
    return dm_class(dm.direct_sum(x.rep, other))


def product(a: GradedElement, b: GradedElement) -> GradedElement:
    """Bilinear extension of the direct sum."""
    a._check(b)
    out: dict[IsoClassKey, Fraction] = defaultdict(Fraction)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            out[product_keys(ka, kb)] += ca * cb
    return GradedElement(a.side, out)


@lru_cache(maxsize=None)
def coproduct_key(x: IsoClassKey, reduction: str = DEFAULT_REDUCTION, restriction: str = DEFAULT_RESTRICTION) -> tuple:
    """``sum_I x_I (x) x_{E\\I}`` as a tuple of ``((left, right), coefficient)``."""
    n = x.degree
    full = (1 << n) - 1
    out: dict[tuple, int] = defaultdict(int)
    for keep in range(1 << n):
        if x.side == LAGRANGIAN:
            left = sp.reduce_mask(x.rep, keep, reduction)
            right = sp.reduce_mask(x.rep, full & ~keep, reduction)
        else:
            left = dm.restrict_mask(x.rep, keep, restriction)
            right = dm.restrict_mask(x.rep, full & ~keep, restriction)
        out[(class_of(left), class_of(right))] += 1
    return tuple(sorted(out.items()))


def coproduct(a: GradedElement, reduction: str = DEFAULT_REDUCTION, restriction: str = DEFAULT_RESTRICTION) -> TensorElement:
    """Linear extension over subset splits.

    The Lagrangian side reduces to ``I`` and to ``E \\ I``; the delta-matroid
    side restricts in the given ``restriction`` mode.
    """
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for k, c in a.terms.items():
        for pair, m in coproduct_key(k, reduction, restriction):
            out[pair] += c * m
    return TensorElement(a.side, out)


def counit(a: GradedElement) -> Fraction:
    """Coefficient of the degree-0 class."""
    return a.terms.get(unit_key(a.side), Fraction(0))


@lru_cache(maxsize=None)
def _antipode_key(x: IsoClassKey, reduction: str, restriction: str) -> tuple:
    if x.degree == 0:
        return ((x, Fraction(1)),)
    out: dict[IsoClassKey, Fraction] = defaultdict(Fraction)
    # S(x) = -sum S(x') x'' over the terms with deg x' < deg x
    for (left, right), m in coproduct_key(x, reduction, restriction):
        if left.degree == x.degree:
            continue
        for k, c in _antipode_key(left, reduction, restriction):
            out[product_keys(k, right)] -= m * c
    return tuple(sorted((k, c) for k, c in out.items() if c))


def antipode(a: GradedElement, reduction: str = DEFAULT_REDUCTION, restriction: str = DEFAULT_RESTRICTION) -> GradedElement:
    out: dict[IsoClassKey, Fraction] = defaultdict(Fraction)
    for k, c in a.terms.items():
        for kk, cc in _antipode_key(k, reduction, restriction):
            out[kk] += c * cc
    return GradedElement(a.side, out)


@lru_cache(maxsize=None)
def nu_key(x: IsoClassKey) -> IsoClassKey:
    if x.side != LAGRANGIAN:
        raise MixedSides("nu acts on Lagrangian classes")
    return dm_class(nu(x.rep))


def nu_hom(a: GradedElement) -> GradedElement:
    """Termwise ``nu`` on representatives, landing on the delta-matroid side."""
    out: dict[IsoClassKey, Fraction] = defaultdict(Fraction)
    for k, c in a.terms.items():
        out[nu_key(k)] += c
    return GradedElement(DELTAMATROID, out)


def nu_tensor(t: TensorElement) -> TensorElement:
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for k, c in t.terms.items():
        out[tuple(nu_key(x) for x in k)] += c
    return TensorElement(DELTAMATROID, out)


# -- bases ------------------------------------------------------------------


def labeled_objects(side: str, n: int) -> Iterator:
    ground = _standard(n)
    if side == LAGRANGIAN:
        return sp.enumerate_lagrangians(ground)
    if side == DELTAMATROID:
        return dm.enumerate_binary(ground)
    raise ValueError(f"unknown side {side!r}")


@lru_cache(maxsize=None)
def basis_classes(side: str, n: int) -> tuple[IsoClassKey, ...]:
    """Sorted isomorphism classes of degree ``n``.

    Delta-matroid classes come from twisting framed graphs, not from ``nu``.
    """
    return tuple(sorted({class_of(o) for o in labeled_objects(side, n)}))


def basis_up_to(side: str, max_degree: int) -> list[IsoClassKey]:
    return [k for n in range(max_degree + 1) for k in basis_classes(side, n)]


# -- four-term relations ------------------------------------------------------


def _combination(side: str, objects: Iterable, signs: tuple[int, ...]) -> GradedElement:
    out: dict[IsoClassKey, Fraction] = defaultdict(Fraction)
    for obj, sgn in zip(objects, signs):
        out[class_of(obj)] += sgn
    return GradedElement(side, out)


def four_term_element(l: LagrangianSubspace, e, e2, convention: str = "inclusion-exclusion") -> GradedElement:
    """``[L] - [V1 L] - [V2 L] + [V1 V2 L]`` for the moves on the pair ``(e, e2)``."""
    first = VassilievMove("first", (e, e2))
    second = VassilievMove("second", (e, e2))
    v1 = sp.apply_move(l, first)
    v2 = sp.apply_move(l, second)
    v12 = sp.apply_move(v2, first)
    return _combination(LAGRANGIAN, (l, v1, v2, v12), CONVENTIONS[convention])


def transported_move(s: dm.SetSystem, move: VassilievMove) -> dm.SetSystem:
    """A Vassiliev move on a binary delta-matroid, carried over through ``nu``."""
    return nu(sp.apply_move(nu_inverse(s), move))


def four_term_element_dm(s: dm.SetSystem, e, e2, convention: str = "inclusion-exclusion") -> GradedElement:
    first = VassilievMove("first", (e, e2))
    second = VassilievMove("second", (e, e2))
    v1 = transported_move(s, first)
    v2 = transported_move(s, second)
    v12 = transported_move(v2, first)
    return _combination(DELTAMATROID, (s, v1, v2, v12), CONVENTIONS[convention])


def four_term_relations(side: str, n: int, convention: str = "inclusion-exclusion") -> list[GradedElement]:
    """Four-term elements of every labeled degree-``n`` object and ordered pair."""
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds {MAX_DEGREE}")
    labels = _standard(n).labels
    pairs = [(a, b) for a in labels for b in labels if a != b]
    make = four_term_element if side == LAGRANGIAN else four_term_element_dm
    return [make(obj, a, b, convention) for obj in labeled_objects(side, n) for a, b in pairs]


def relation_rank(relations: Iterable[GradedElement]) -> int:
    return rational_rank(r.terms for r in relations)


def quotient_dimension(side: str, n: int, convention: str = "inclusion-exclusion") -> int:
    """Dimension of the degree-``n`` part modulo the four-term span."""
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds {MAX_DEGREE}")
    return len(basis_classes(side, n)) - relation_rank(four_term_relations(side, n, convention))


def clear_caches() -> None:
    """Forget memoized classes and structure constants (for cold timings)."""
    for fn in (lagrangian_class, dm_class, product_keys, coproduct_key, _antipode_key, nu_key, basis_classes):
        fn.cache_clear()
