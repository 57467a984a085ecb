import itertools
import random

import pytest

from deltalag import gf2, symplectic as sp
from deltalag.correspondence import nu
from deltalag.gf2 import BitMatrix
from deltalag.symplectic import GroundSet, VassilievMove

import oracles
from helpers import lag, vec


def all_l(n):
    return list(sp.enumerate_lagrangians(GroundSet.range(n)))


def test_pairing_examples():
    g = GroundSet.range(2)
    assert sp.symplectic_form(g, vec(g, "1"), vec(g, "1^")) == 1
    assert sp.symplectic_form(g, vec(g, "1^"), vec(g, "1")) == 1
    assert sp.symplectic_form(g, vec(g, "1"), vec(g, "2")) == 0
    assert sp.symplectic_form(g, vec(g, "1^+2+2^"), vec(g, "1+2")) == 0


def test_pairing_matches_oracle():
    for n in (1, 2, 3):
        for u in range(1 << 2 * n):
            for v in range(0, 1 << 2 * n, 3):
                assert sp.pairing(u, v, n) == oracles.form(u, v, n)


def test_example_subspace_elements(worked):
    g = worked.ground
    want = {0, vec(g, "1^+2+2^"), vec(g, "1+2"), vec(g, "1+1^+2^")}
    assert set(worked.elements()) == want
    assert len(worked.elements()) == 4


def test_make_lagrangian_errors():
    assert sp.is_graphic(lag(2, "1^", "2^"))
    with pytest.raises(sp.NotIsotropic):
        lag(1, "1", "1^")
    with pytest.raises(sp.WrongDimension):
        lag(2, "1")
    with pytest.raises(sp.WrongDimension):
        lag(2, "1", "1+2+2", "1")


def test_canonical_form_independent_of_basis(worked):
    g = worked.ground
    other = sp.make_lagrangian(g, [vec(g, "1+1^+2^"), vec(g, "1+2"), vec(g, "1^+2+2^")])
    assert other == worked
    assert other.basis == worked.basis


@pytest.mark.parametrize("n,want", [(0, 1), (1, 3), (2, 15), (3, 135)])
def test_enumeration_counts(n, want):
    got = all_l(n)
    assert len(got) == want == sp.count_lagrangians(n)
    assert len(set(got)) == want


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(n):
    # frozen: 3, 15, 135 from the independent search
    brute = oracles.lagrangians_by_brute_force(n)
    assert len(brute) == {1: 3, 2: 15, 3: 135}[n]
    assert {frozenset(l.elements()) for l in all_l(n)} == brute


def test_enumeration_is_deterministic():
    assert all_l(3) == all_l(3)


def test_enumeration_cap():
    with pytest.raises(sp.GroundSetTooLarge):
        next(sp.enumerate_lagrangians(GroundSet.range(sp.MAX_ENUMERATION_SIZE + 1)))


def test_local_dual_examples():
    l = lag(2, "1^", "2^")
    assert sp.local_dual(l, []) == l
    assert sp.local_dual(l, [1, 2]) == lag(2, "1", "2")
    with pytest.raises(KeyError):
        sp.local_dual(l, [3])


def test_local_dual_involution_exhaustive():
    for n in (1, 2, 3):
        for l in all_l(n):
            for s in range(1 << n):
                assert sp.local_dual_mask(sp.local_dual_mask(l, s), s) == l


def test_graphic_examples(worked):
    assert not sp.is_graphic(worked)
    l = lag(2, "1^", "2^")
    g = l.ground
    assert sp.graphic_basis(l) == (vec(g, "1^"), vec(g, "2^"))
    assert sp.graphic_matrix(l).to_lists() == [[0, 0], [0, 0]]
    assert sp.graphic_matrix(lag(2, "1+1^", "2+2^")).to_lists() == [[1, 0], [0, 1]]
    with pytest.raises(sp.NotGraphic):
        sp.graphic_matrix(worked)


def test_from_symmetric_matrix_examples():
    g = GroundSet.range(2)
    assert sp.from_symmetric_matrix(g, BitMatrix.zeros(2, 2)) == lag(2, "1^", "2^")
    assert sp.from_symmetric_matrix(g, BitMatrix.from_lists([[0, 1], [1, 0]])) == lag(2, "1^+2", "2^+1")
    assert sp.from_symmetric_matrix(g, BitMatrix.identity(2)) == lag(2, "1+1^", "2+2^")
    with pytest.raises(sp.NotSymmetric):
        sp.from_symmetric_matrix(g, BitMatrix.from_lists([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        sp.from_symmetric_matrix(g, BitMatrix.identity(3))


@pytest.mark.parametrize("n,want", [(1, 2), (2, 8), (3, 64)])
def test_graphic_count(n, want):
    assert sum(sp.is_graphic(l) for l in all_l(n)) == want == 2 ** (n * (n + 1) // 2)


def test_graphic_iff_no_primal_vector():
    for n in (1, 2, 3):
        for l in all_l(n):
            primal_hit = any(v and not (v >> n) for v in l.elements())
            assert sp.is_graphic(l) == (not primal_hit)


def test_graphic_matrix_roundtrip_n4():
    g = GroundSet.range(4)
    for m in oracles.symmetric_matrices(4):
        a = BitMatrix.from_lists(m)
        assert sp.graphic_matrix(sp.from_symmetric_matrix(g, a)).rows == a.rows


def test_graphify_examples(worked):
    assert sp.graphify(lag(2, "1", "2")) == frozenset({1, 2})
    assert sp.is_graphic(sp.local_dual(worked, sp.graphify(worked)))
    # only the full swap works for <1,2>
    l = lag(2, "1", "2")
    ok = [s for s in range(4) if sp.is_graphic(sp.local_dual_mask(l, s))]
    assert ok == [3]


def test_graphify_exhaustive():
    for n in (1, 2, 3):
        for l in all_l(n):
            assert sp.is_graphic(sp.local_dual(l, sp.graphify(l)))


def test_reduce_examples():
    l = lag(2, "1", "2")
    assert sp.reduce(l, [1, 2]) == l
    assert sp.reduce(l, []) == sp.zero_space()
    assert sp.reduce(l, [1]) == sp.make_lagrangian(GroundSet([1]), [1])
    with pytest.raises(KeyError):
        sp.reduce(l, [5])
    with pytest.raises(ValueError):
        sp.reduce(l, [1], coisotropic="sideways")


def test_reduce_outputs_are_lagrangian():
    for n in (1, 2, 3):
        for l in all_l(n):
            for keep in range(1 << n):
                for mode in sp.REDUCTIONS:
                    r = sp.reduce_mask(l, keep, mode)
                    assert r.n == bin(keep).count("1")
                    assert gf2.rank_rows(r.basis) == r.n
                    assert sp.is_isotropic(r.basis, r.n)


def test_reduce_feasibility_characterization():
    # Y feasible for nu(reduce(L, I)) iff every element of L inside <Y^, E\Y> lies in <E\I>
    for n in (1, 2, 3):
        full = (1 << n) - 1
        for l in all_l(n):
            elems = l.elements()
            for keep in range(1 << n):
                drop = full & ~keep
                red = nu(sp.reduce_mask(l, keep))
                idx = [i for i in range(n) if (keep >> i) & 1]
                for y in range(1 << n):
                    if y & ~keep:
                        continue
                    allowed = (full & ~y) | (y << n)
                    inside = [v for v in elems if not (v & ~allowed)]
                    want = all(not (v & ~drop) for v in inside)
                    ysmall = gf2.compress(y, idx)
                    assert red.has_mask(ysmall) == want


def test_reduce_commutes_with_local_dual_inside_i():
    for n in (1, 2, 3):
        for l in all_l(n):
            for keep in range(1 << n):
                idx = [i for i in range(n) if (keep >> i) & 1]
                for s in range(1 << n):
                    if s & ~keep:
                        continue
                    lhs = sp.reduce_mask(sp.local_dual_mask(l, s), keep)
                    rhs = sp.local_dual_mask(sp.reduce_mask(l, keep), gf2.compress(s, idx))
                    assert lhs == rhs


def test_reduce_does_not_commute_with_local_dual_outside_i():
    # dualizing a discarded element can change the reduction, but need not
    l = lag(2, "1", "2^")
    lhs = sp.reduce(sp.local_dual(l, [2]), [1])
    rhs = sp.reduce(l, [1])
    assert lhs == rhs  # both <1>
    l = lag(2, "1+2", "1^+2^")
    lhs = sp.reduce(sp.local_dual(l, [2]), [1])
    rhs = sp.reduce(l, [1])
    assert lhs != rhs


def test_direct_sum_and_relabel():
    a = lag(1, "1")
    b = sp.make_lagrangian(GroundSet([2]), [0b10])
    s = sp.direct_sum(a, b)
    assert s == lag(2, "1", "2^")
    with pytest.raises(ValueError):
        sp.direct_sum(a, a)
    assert sp.relabel(s, [1, 0]) == lag(2, "2", "1^")


def test_first_move_toggles_edge():
    for n in (2, 3):
        g = GroundSet.range(n)
        for m in oracles.symmetric_matrices(n):
            for i, j in itertools.combinations(range(n), 2):
                flipped = [row[:] for row in m]
                flipped[i][j] ^= 1
                flipped[j][i] ^= 1
                mv = VassilievMove("first", (i + 1, j + 1))
                got = sp.apply_move(sp.from_symmetric_matrix(g, BitMatrix.from_lists(m)), mv)
                assert got == sp.from_symmetric_matrix(g, BitMatrix.from_lists(flipped))


def test_moves_are_involutions_and_commute():
    for n in (2, 3):
        g = GroundSet.range(n)
        for e, f in itertools.permutations(g.labels, 2):
            m1 = sp.move_matrix(g, VassilievMove("first", (e, f)))
            m2 = sp.move_matrix(g, VassilievMove("second", (e, f)))
            assert gf2.matmul(m1, m1) == BitMatrix.identity(2 * n)
            assert gf2.matmul(m1, m2) == gf2.matmul(m2, m1)
            for l in all_l(n):
                a = sp.apply_matrix(sp.apply_matrix(l, m1), m2)
                b = sp.apply_matrix(sp.apply_matrix(l, m2), m1)
                assert a == b
                assert sp.apply_matrix(sp.apply_matrix(l, m1), m1) == l


def test_move_validation():
    with pytest.raises(ValueError):
        VassilievMove("third", (1, 2))
    with pytest.raises(ValueError):
        VassilievMove("first", (1, 1))
    with pytest.raises(KeyError):
        sp.apply_move(lag(2, "1", "2"), VassilievMove("first", (1, 9)))


def test_random_n4_local_dual_and_reduce():
    rng = random.Random(4)
    g = GroundSet.range(4)
    for _ in range(100):
        a = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i, 4):
                a[i][j] = a[j][i] = rng.randint(0, 1)
        l = sp.local_dual_mask(sp.from_symmetric_matrix(g, BitMatrix.from_lists(a)), rng.randrange(16))
        assert sp.is_graphic(sp.local_dual(l, sp.graphify(l)))
        keep = rng.randrange(16)
        r = sp.reduce_mask(l, keep)
        assert sp.is_isotropic(r.basis, r.n) and len(r.basis) == r.n
