"""
Exhaustive verification suites.

Each suite is a function ``suite(max_n) -> SuiteResult``.  ``run_all`` runs
them in a fixed order so that reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import deltamatroid as dm
from . import hopf
from . import ribbon as rb
from . import symplectic as sp
from .correspondence import nu, nu_inverse
from .symplectic import GroundSet, VassilievMove


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    seconds: float = field(default=0.0, compare=False)


def _result(name, failures, checked, detail=""):
    if failures:
        return SuiteResult(name, False, checked, f"first failure: {failures[0]}")
    return SuiteResult(name, True, checked, detail)


def _subsets(n):
    return range(1 << n)


def worked_example(max_n: int = 2) -> SuiteResult:
    g = GroundSet.range(2)
    l = sp.make_lagrangian(g, [sp.dual(g, 1) | sp.primal(g, 2) | sp.dual(g, 2), sp.primal(g, 1) | sp.primal(g, 2)])
    want = dm.SetSystem.from_sets(g, [{1}, {2}, {1, 2}])
    failures = []
    if len(l.elements()) != 4:
        failures.append("subspace does not have four elements")
    if nu(l) != want:
        failures.append(f"nu gave {nu(l)!r}")
    if nu_inverse(want) != l:
        failures.append("nu_inverse does not recover the subspace")
    return _result("worked-example", failures, 3, "nu(L) = {1} {2} {1,2}")


def bijection(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    counts = []
    for n in range(max_n + 1):
        g = GroundSet.range(n)
        ls = list(sp.enumerate_lagrangians(g))
        counts.append(len(ls))
        if len(ls) != sp.count_lagrangians(n) or len(set(ls)) != len(ls):
            failures.append(f"n={n}: {len(ls)} subspaces")
        images = [nu(l) for l in ls]
        if len(set(images)) != len(ls):
            failures.append(f"n={n}: nu not injective")
        if set(images) != set(dm.enumerate_binary(g)):
            failures.append(f"n={n}: image differs from binary delta-matroids")
        for l, s in zip(ls, images):
            checked += 1
            if nu_inverse(s) != l:
                failures.append(f"n={n}: nu_inverse(nu(L)) != L for {l}")
                break
    return _result("bijection", failures, checked, "counts " + ",".join(map(str, counts)))


def graphic_matrices(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    for n in range(max_n + 1):
        g = GroundSet.range(n)
        graphic = sum(1 for l in sp.enumerate_lagrangians(g) if sp.is_graphic(l))
        if graphic != 2 ** (n * (n + 1) // 2):
            failures.append(f"n={n}: {graphic} graphic subspaces")
    for n in range(max_n + 2):
        g = GroundSet.range(n)
        for fg in dm.enumerate_framed_graphs(g):
            checked += 1
            l = sp.from_symmetric_matrix(g, fg.adjacency)
            if sp.graphic_matrix(l).rows != fg.adjacency.rows:
                failures.append(f"n={n}: roundtrip fails")
                break
            if n <= max_n and nu(l) != dm.nondegeneracy_dm(fg):
                failures.append(f"n={n}: nu of graphic subspace is not the non-degeneracy system")
                break
    return _result("graphic-matrices", failures, checked)


def twist_equivariance(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    for n in range(max_n + 1):
        g = GroundSet.range(n)
        for l in sp.enumerate_lagrangians(g):
            base = nu(l)
            for t in _subsets(n):
                checked += 1
                if nu(sp.local_dual_mask(l, t)) != dm.twist_mask(base, t):
                    failures.append(f"{l} twisted by {t:b}")
    return _result("twist-equivariance", failures, checked)


def graphification(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for l in sp.enumerate_lagrangians(GroundSet.range(n)):
            checked += 1
            if not sp.is_graphic(sp.local_dual_mask(l, sp.graphify_mask(l))):
                failures.append(str(l))
    return _result("graphification", failures, checked)


def exchange_axiom(max_n: int = 4) -> SuiteResult:
    failures = []
    checked = 0
    for n in range(max_n + 1):
        g = GroundSet.range(n)
        for fg in dm.enumerate_framed_graphs(g):
            base = dm.nondegeneracy_dm(fg)
            for t in _subsets(n):
                checked += 1
                s = dm.twist_mask(base, t)
                if not dm.check_sea(s) or not dm.is_binary(s):
                    failures.append(repr(s))
    return _result("exchange-axiom", failures, checked)


def ribbon_corpus(max_edges: int = 3):
    for g in rb.one_vertex_corpus(max_edges):
        for s in _subsets(g.num_edges):
            yield rb.partial_dual_mask(g, s)


def ribbon_rho_pi(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    for g in ribbon_corpus(max_n):
        checked += 1
        r = rb.rho(g)
        if nu(rb.pi(g)) != r:
            failures.append(f"nu(pi) != rho for {g}")
        if not dm.check_sea(r):
            failures.append(f"rho not a delta-matroid for {g}")
    return _result("ribbon-rho-pi", failures, checked)


def _pairs(side, max_n):
    basis = hopf.basis_up_to(side, max_n)
    return [(x, y) for x in basis for y in basis if x.degree + y.degree <= max_n]


def _hopf_axioms(side: str, max_n: int, failures: list) -> int:
    E = hopf.GradedElement
    checked = 0
    unit = E.unit(side)
    for x in hopf.basis_up_to(side, max_n):
        checked += 1
        ex = E.basis(x)
        d = hopf.coproduct(ex)
        if d.swap() != d:
            failures.append(f"{side}: not cocommutative at {x!r}")
        # coassociativity on a triple tensor
        left = {}
        right = {}
        for (a, b), c in d.terms.items():
            for (a1, a2), c1 in hopf.coproduct(E.basis(a)).terms.items():
                left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
            for (b1, b2), c2 in hopf.coproduct(E.basis(b)).terms.items():
                right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
        if hopf.TensorElement(side, left) != hopf.TensorElement(side, right):
            failures.append(f"{side}: not coassociative at {x!r}")
        # counit on either factor
        lhs = E(side, {b: c for (a, b), c in d.terms.items() if a.degree == 0})
        rhs = E(side, {a: c for (a, b), c in d.terms.items() if b.degree == 0})
        if lhs != ex or rhs != ex:
            failures.append(f"{side}: counit axiom fails at {x!r}")
        # antipode on either factor
        want = E(side, {hopf.unit_key(side): hopf.counit(ex)})
        m_left = E.zero(side)
        m_right = E.zero(side)
        for (a, b), c in d.terms.items():
            m_left = m_left + c * (hopf.antipode(E.basis(a)) * E.basis(b))
            m_right = m_right + c * (E.basis(a) * hopf.antipode(E.basis(b)))
        if m_left != want or m_right != want:
            failures.append(f"{side}: antipode axiom fails at {x!r}")
    for x, y in _pairs(side, max_n):
        checked += 1
        ex, ey = E.basis(x), E.basis(y)
        if ex * ey != ey * ex:
            failures.append(f"{side}: not commutative at {x!r}, {y!r}")
        if unit * ex != ex:
            failures.append(f"{side}: unit fails at {x!r}")
        if hopf.coproduct(ex * ey) != hopf.coproduct(ex) * hopf.coproduct(ey):
            failures.append(f"{side}: coproduct not multiplicative at {x!r}, {y!r}")
        for z in hopf.basis_up_to(side, max_n - x.degree - y.degree):
            ez = E.basis(z)
            if (ex * ey) * ez != ex * (ey * ez):
                failures.append(f"{side}: not associative at {x!r}, {y!r}, {z!r}")
    return checked


def _nu_checks(max_n: int, failures: list) -> int:
    E = hopf.GradedElement
    checked = 0
    for n in range(max_n + 1):
        ls = hopf.basis_classes(hopf.LAGRANGIAN, n)
        ds = hopf.basis_classes(hopf.DELTAMATROID, n)
        if sorted(hopf.nu_key(x) for x in ls) != list(ds):
            failures.append(f"degree {n}: nu is not a bijection of classes")
    for x, y in _pairs(hopf.LAGRANGIAN, max_n):
        checked += 1
        ex, ey = E.basis(x), E.basis(y)
        if hopf.nu_hom(ex * ey) != hopf.nu_hom(ex) * hopf.nu_hom(ey):
            failures.append(f"nu not multiplicative at {x!r}, {y!r}")
    for x in hopf.basis_up_to(hopf.LAGRANGIAN, max_n):
        checked += 1
        ex = E.basis(x)
        if hopf.nu_tensor(hopf.coproduct(ex)) != hopf.coproduct(hopf.nu_hom(ex)):
            failures.append(f"nu not comultiplicative at {x!r}")
    return checked


def nu_morphism(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = _nu_checks(max_n, failures)
    return _result("nu-morphism", failures, checked)


def bialgebra(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = sum(_hopf_axioms(side, max_n, failures) for side in hopf.SIDES)
    return _result("bialgebra", failures, checked)


def hopf_morphism(max_n: int = 3) -> SuiteResult:
    """nu is multiplicative and comultiplicative, and both sides are Hopf algebras."""
    failures = []
    checked = _nu_checks(max_n, failures)
    for side in hopf.SIDES:
        checked += _hopf_axioms(side, max_n, failures)
    return _result("hopf-morphism", failures, checked)


def coproduct_arbiter(max_n: int = 3) -> dict[tuple[str, str], bool]:
    """Which (reduction, restriction) pairs make nu comultiplicative up to degree ``max_n``."""
    E = hopf.GradedElement
    out = {}
    for red in sp.REDUCTIONS:
        for res in dm.RESTRICTIONS:
            ok = True
            for x in hopf.basis_up_to(hopf.LAGRANGIAN, max_n):
                ex = E.basis(x)
                lhs = hopf.nu_tensor(hopf.coproduct(ex, reduction=red))
                rhs = hopf.coproduct(hopf.nu_hom(ex), restriction=res)
                if lhs != rhs:
                    ok = False
                    break
            out[(red, res)] = ok
    return out


def quotient_dimensions(max_n: int = 3) -> dict[str, dict[str, list[int]]]:
    return {
        conv: {side: [hopf.quotient_dimension(side, n, conv) for n in range(max_n + 1)] for side in hopf.SIDES}
        for conv in hopf.CONVENTIONS
    }


def four_term(max_n: int = 3) -> SuiteResult:
    failures = []
    checked = 0
    dims = quotient_dimensions(max_n)
    for conv, by_side in dims.items():
        if by_side[hopf.LAGRANGIAN] != by_side[hopf.DELTAMATROID]:
            failures.append(f"{conv}: dimensions differ {by_side}")
    for n in range(2, max_n + 1):
        rel_l = hopf.four_term_relations(hopf.LAGRANGIAN, n)
        rel_d = hopf.four_term_relations(hopf.DELTAMATROID, n)
        mapped = [hopf.nu_hom(r) for r in rel_l]
        checked += len(rel_l)
        rl, rd = hopf.relation_rank(mapped), hopf.relation_rank(rel_d)
        if not (rl == rd == hopf.relation_rank(mapped + rel_d) == hopf.relation_rank(rel_l)):
            failures.append(f"degree {n}: relation spans differ under nu")
    dl = dims["inclusion-exclusion"][hopf.LAGRANGIAN]
    da = dims["alternating"][hopf.LAGRANGIAN]
    return _result("four-term", failures, checked, f"dims {dl} (alternating signs {da})")


def properties(max_n: int = 3, seed: int = 0, samples: int = 200) -> SuiteResult:
    """Involutions, move commutation, empty-set feasibility, Euler consistency."""
    failures = []
    checked = 0
    for n in range(max_n + 1):
        g = GroundSet.range(n)
        pairs = [(a, b) for a in g for b in g if a != b]
        for l in sp.enumerate_lagrangians(g):
            s = nu(l)
            for t in _subsets(n):
                checked += 1
                if sp.local_dual_mask(sp.local_dual_mask(l, t), t) != l:
                    failures.append(f"local duality not an involution at {l}")
                if dm.twist_mask(dm.twist_mask(s, t), t) != s:
                    failures.append(f"twist not an involution at {s!r}")
            if s.has_mask(0) != sp.is_graphic(l):
                failures.append(f"empty-set feasibility vs graphic at {l}")
            for a, b in pairs:
                m1 = sp.move_matrix(g, VassilievMove("first", (a, b)))
                m2 = sp.move_matrix(g, VassilievMove("second", (a, b)))
                if sp.apply_matrix(sp.apply_matrix(l, m1), m2) != sp.apply_matrix(sp.apply_matrix(l, m2), m1):
                    failures.append(f"moves do not commute at {l}, {(a, b)}")
                if sp.apply_matrix(sp.apply_matrix(l, m1), m1) != l:
                    failures.append(f"first move not an involution at {l}")
    for g in ribbon_corpus(max_n):
        if g.is_orientable():
            checked += 1
            chi = rb.euler_characteristic(g)
            if chi > 2 or chi % 2:
                failures.append(f"Euler characteristic {chi} for orientable {g}")
    # randomized at n = 4
    rng = random.Random(seed)
    g4 = GroundSet.range(4)
    for _ in range(samples):
        checked += 1
        fg = _random_framed_graph(rng, g4)
        t = rng.randrange(16)
        l = sp.local_dual_mask(sp.from_symmetric_matrix(g4, fg.adjacency), t)
        s = nu(l)
        if nu_inverse(s) != l:
            failures.append(f"n=4 roundtrip fails at {l}")
        if sp.local_dual_mask(sp.local_dual_mask(l, t), t) != l or dm.twist_mask(dm.twist_mask(s, t), t) != s:
            failures.append(f"n=4 involution fails at {l}")
        if s.has_mask(0) != sp.is_graphic(l):
            failures.append(f"n=4 empty-set feasibility fails at {l}")
        if not sp.is_graphic(sp.local_dual_mask(l, sp.graphify_mask(l))):
            failures.append(f"n=4 graphify fails at {l}")
        a, b = rng.sample(g4.labels, 2)
        m1 = sp.move_matrix(g4, VassilievMove("first", (a, b)))
        m2 = sp.move_matrix(g4, VassilievMove("second", (a, b)))
        if sp.apply_matrix(sp.apply_matrix(l, m1), m2) != sp.apply_matrix(sp.apply_matrix(l, m2), m1):
            failures.append(f"n=4 moves do not commute at {l}")
    return _result("properties", failures, checked)


def _random_framed_graph(rng: random.Random, ground: GroundSet) -> dm.FramedGraph:
    n = len(ground)
    rows = [0] * n
    for i, j in combinations(range(n), 2):
        if rng.getrandbits(1):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    for i in range(n):
        if rng.getrandbits(1):
            rows[i] |= 1 << i
    return dm.FramedGraph(sp.BitMatrix(tuple(rows), n, ground.labels, ground.labels))


# name, function, size offset relative to --max-n, hard cap
SUITES: list[tuple[str, Callable[[int], SuiteResult], int, int | None]] = [
    ("worked-example", worked_example, 0, None),
    ("bijection", bijection, 0, None),
    ("graphic-matrices", graphic_matrices, 0, None),
    ("twist-equivariance", twist_equivariance, 0, None),
    ("graphification", graphification, 0, None),
    # framed graphs are checked one vertex further, up to 4
    ("exchange-axiom", exchange_axiom, 1, 4),
    ("ribbon-rho-pi", ribbon_rho_pi, 0, None),
    ("hopf-morphism", hopf_morphism, 0, 3),
    ("four-term", four_term, 0, 3),
    ("properties", properties, 0, None),
]


def run_suite(name: str, max_n: int) -> SuiteResult:
    for sname, fn, offset, cap in SUITES:
        if sname == name:
            n = max_n + offset
            if cap is not None:
                n = min(n, cap)
            t = time.perf_counter()
            res = fn(n)
            res.seconds = time.perf_counter() - t
            return res
    raise KeyError(f"unknown suite {name!r}")


def run_all(max_n: int = 3) -> list[SuiteResult]:
    return [run_suite(name, max_n) for name, *_ in SUITES]
