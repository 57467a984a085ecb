import json
from fractions import Fraction
from pathlib import Path

import pytest

from deltalag import deltamatroid as dm
from deltalag import hopf
from deltalag import symplectic as sp
from deltalag.correspondence import nu
from deltalag.hopf import DELTAMATROID, LAGRANGIAN, GradedElement
from deltalag.symplectic import GroundSet

import oracles
from helpers import lag, system

GOLDEN = json.loads((Path(__file__).parent / "golden" / "qdim.json").read_text())
E = GradedElement


def dm_el(s):
    return E.of(s)


def test_class_counts_match_orbit_oracle():
    want = GOLDEN["basis_class_counts"]
    assert want[LAGRANGIAN] == want[DELTAMATROID] == [1, 3, 11, 45]
    for n in range(4):
        spaces = oracles.lagrangians_by_brute_force(n) if n else {frozenset({0})}
        assert oracles.lagrangian_orbit_count(spaces, n) == want[LAGRANGIAN][n]
        for side in hopf.SIDES:
            assert len(hopf.basis_classes(side, n)) == want[side][n]


def test_nu_is_bijective_on_classes():
    for n in range(4):
        image = [hopf.nu_key(k) for k in hopf.basis_classes(LAGRANGIAN, n)]
        assert sorted(image) == list(hopf.basis_classes(DELTAMATROID, n))
        assert all(k.degree == n for k in image)


def test_mixed_sides_rejected():
    with pytest.raises(hopf.MixedSides):
        E.unit(LAGRANGIAN) + E.unit(DELTAMATROID)
    with pytest.raises(hopf.MixedSides):
        hopf.nu_key(hopf.unit_key(DELTAMATROID))
    with pytest.raises(ValueError):
        E("neither")


def test_product_example():
    a = dm_el(dm.SetSystem.from_sets([1], [[]]))
    b = dm_el(dm.SetSystem.from_sets([1], [[], [1]]))
    assert a * b == dm_el(system(2, [], [2]))
    assert (a * b).degrees() == {2}


def test_unit_and_representatives():
    for side in hopf.SIDES:
        u = E.unit(side)
        for k in hopf.basis_up_to(side, 2):
            x = E.basis(k)
            assert u * x == x * u == x
    l = lag(2, "1^+2+2^", "1+2")
    swapped = sp.relabel(l, [1, 0])
    assert E.of(l) == E.of(swapped)
    assert E.of(l) * E.of(lag(1, "1")) == E.of(swapped) * E.of(lag(1, "1"))


def test_linear_structure():
    x = E.of(lag(1, "1"))
    y = E.of(lag(1, "1^"))
    assert (x + y) - y == x
    assert 2 * x - x - x == E.zero(LAGRANGIAN)
    assert not E.zero(LAGRANGIAN)
    assert (Fraction(1, 2) * x).terms == {hopf.class_of(lag(1, "1")): Fraction(1, 2)}


def test_coproduct_examples():
    for side in hopf.SIDES:
        u = E.unit(side)
        uk = hopf.unit_key(side)
        assert hopf.coproduct(u).terms == {(uk, uk): 1}
        assert hopf.counit(u) == 1
        assert hopf.antipode(u) == u
        for k in hopf.basis_classes(side, 1):
            assert hopf.coproduct(E.basis(k)).terms == {(k, uk): 1, (uk, k): 1}
            assert hopf.antipode(E.basis(k)) == -E.basis(k)
            assert hopf.counit(E.basis(k)) == 0


def test_lagrangian_coproduct_matches_element_oracle():
    # every split of every labeled degree-3 subspace, reduction checked on element sets
    for l in sp.enumerate_lagrangians(GroundSet.range(3)):
        elems = l.elements()
        for keep in range(8):
            red = sp.reduce_mask(l, keep)
            assert frozenset(red.elements()) == oracles.reduce_elements(elems, 3, keep)


def test_coproduct_degrees_sum():
    for side in hopf.SIDES:
        for k in hopf.basis_up_to(side, 3):
            for (a, b), _ in hopf.coproduct(E.basis(k)).items():
                assert a.degree + b.degree == k.degree
            assert sum(c for _, c in hopf.coproduct(E.basis(k)).items()) == 2**k.degree


def test_cocommutative_and_counit():
    for side in hopf.SIDES:
        uk = hopf.unit_key(side)
        for k in hopf.basis_up_to(side, 3):
            d = hopf.coproduct(E.basis(k))
            assert d.swap() == d
            left = sum((c * E.basis(b) for (a, b), c in d.items() if a == uk), E.zero(side))
            assert left == E.basis(k)


def test_antipode_axiom():
    for side in hopf.SIDES:
        for k in hopf.basis_up_to(side, 3):
            x = E.basis(k)
            total = E.zero(side)
            for (a, b), c in hopf.coproduct(x).items():
                total = total + c * (hopf.antipode(E.basis(a)) * E.basis(b))
            assert total == hopf.counit(x) * E.unit(side)


def test_nu_multiplicative_and_comultiplicative():
    for n in range(4):
        for x in hopf.basis_classes(LAGRANGIAN, n):
            ex = E.basis(x)
            assert hopf.nu_tensor(hopf.coproduct(ex)) == hopf.coproduct(hopf.nu_hom(ex))
            for m in range(4 - n):
                for y in hopf.basis_classes(LAGRANGIAN, m):
                    ey = E.basis(y)
                    assert hopf.nu_hom(ex * ey) == hopf.nu_hom(ex) * hopf.nu_hom(ey)


def test_nu_hom_on_labeled_objects():
    l = lag(2, "1^+2+2^", "1+2")
    assert hopf.nu_hom(E.of(l)) == E.of(nu(l))


def test_coproduct_arbiter_golden():
    from deltalag.verify import coproduct_arbiter

    got = {f"{r}/{s}": ok for (r, s), ok in coproduct_arbiter(3).items()}
    assert got == GOLDEN["coproduct_arbiter"]
    assert [k for k, ok in got.items() if ok] == [f"{hopf.DEFAULT_REDUCTION}/{hopf.DEFAULT_RESTRICTION}"]


def test_naive_restriction_breaks_comultiplicativity():
    # the smallest witness: <1, 2^> has nu = {{1}}, and naive restriction to {2} is empty
    l = lag(2, "1", "2^")
    x = hopf.class_of(l)
    lhs = hopf.nu_tensor(hopf.coproduct(E.basis(x)))
    assert lhs == hopf.coproduct(hopf.nu_hom(E.basis(x)), restriction="minimal")
    assert lhs != hopf.coproduct(hopf.nu_hom(E.basis(x)), restriction="naive")


@pytest.mark.parametrize("convention", sorted(hopf.CONVENTIONS))
def test_quotient_dimensions_golden(convention):
    want = GOLDEN["quotient_dimensions"][convention]
    assert want[LAGRANGIAN] == want[DELTAMATROID]
    for side in hopf.SIDES:
        assert [hopf.quotient_dimension(side, n, convention) for n in range(4)] == want[side]


def test_quotient_dimension_small_cases():
    for side in hopf.SIDES:
        assert hopf.quotient_dimension(side, 0) == 1
        assert hopf.quotient_dimension(side, 1) == len(hopf.basis_classes(side, 1)) == 3
    with pytest.raises(hopf.DegreeTooLarge):
        hopf.quotient_dimension(LAGRANGIAN, 4)


def test_four_term_fixed_points_vanish():
    # both moves only add primal vectors to duals, so <1, 2> is fixed
    l = lag(2, "1", "2")
    assert sp.apply_move(l, sp.VassilievMove("first", (1, 2))) == l
    assert sp.apply_move(l, sp.VassilievMove("second", (1, 2))) == l
    assert not hopf.four_term_element(l, 1, 2)


def test_four_term_symmetric_in_move_order():
    for l in sp.enumerate_lagrangians(GroundSet.range(3)):
        for a, b in [(1, 2), (2, 3), (1, 3)]:
            first = sp.VassilievMove("first", (a, b))
            second = sp.VassilievMove("second", (a, b))
            one = sp.apply_move(sp.apply_move(l, second), first)
            other = sp.apply_move(sp.apply_move(l, first), second)
            assert one == other
            assert hopf.nu_hom(hopf.four_term_element(l, a, b)) == hopf.four_term_element_dm(nu(l), a, b)


def test_transported_relation_span():
    for n in (2, 3):
        rel_l = hopf.four_term_relations(LAGRANGIAN, n)
        rel_d = hopf.four_term_relations(DELTAMATROID, n)
        mapped = [hopf.nu_hom(r) for r in rel_l]
        r = hopf.relation_rank(rel_l)
        assert hopf.relation_rank(mapped) == r == hopf.relation_rank(rel_d) == hopf.relation_rank(mapped + rel_d)
