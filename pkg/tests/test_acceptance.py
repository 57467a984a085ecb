"""Acceptance criteria, one test each, with exact arithmetic and wall-clock limits.

Run ``pytest tests/test_acceptance.py`` for the summary table at the end, or
``python3 tests/test_acceptance.py`` to print it directly.
"""

import json
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deltalag import deltamatroid as dm  # noqa: E402
from deltalag import hopf, verify  # noqa: E402
from deltalag import ribbon as rb  # noqa: E402
from deltalag import symplectic as sp  # noqa: E402
from deltalag.correspondence import nu, nu_inverse  # noqa: E402
from deltalag.gf2 import BitMatrix  # noqa: E402
from deltalag.symplectic import GroundSet  # noqa: E402

import oracles  # noqa: E402

GOLDEN = json.loads((Path(__file__).parent / "golden" / "qdim.json").read_text())
RESULTS: dict[int, str] = {}


def record(num, title, limit, fn):
    """Run ``fn`` once, compare its wall time to ``limit`` seconds and log a line."""
    t = time.perf_counter()
    try:
        fn()
        ok, why = True, ""
    except AssertionError as exc:
        ok, why = False, f" ({exc})" if str(exc) else " (assertion failed)"
    dt = time.perf_counter() - t
    if ok and dt >= limit:
        ok, why = False, f" (too slow: limit {limit:g}s)"
    RESULTS[num] = f"AC{num:<2} {'PASS' if ok else 'FAIL'}  {title}  [{dt:.3f}s < {limit:g}s]{why}"
    print(RESULTS[num])
    assert ok, RESULTS[num]


def _worked():
    g = GroundSet.range(2)
    return sp.make_lagrangian(g, [sp.dual(g, 1) | sp.primal(g, 2) | sp.dual(g, 2), sp.primal(g, 1) | sp.primal(g, 2)])


def test_ac01_worked_example():
    l = _worked()
    want = dm.SetSystem.from_sets([1, 2], [[1], [2], [1, 2]])
    nu(l), nu_inverse(want)  # warm the import paths; the limit is on the computation

    def check():
        s = nu(l)
        assert [s.has_mask(y) for y in range(4)] == [False, True, True, True]
        assert s == want
        assert nu_inverse(s) == l

    record(1, "worked example: nu(L) = {1} {2} {1,2} and nu_inverse recovers L", 0.001, check)


def test_ac02_bijection():
    def check():
        for n, want in ((1, 3), (2, 15), (3, 135)):
            ls = list(sp.enumerate_lagrangians(GroundSet.range(n)))
            assert len(ls) == want == sp.count_lagrangians(n)
            assert {frozenset(l.elements()) for l in ls} == oracles.lagrangians_by_brute_force(n)
            images = [nu(l) for l in ls]
            assert len(set(images)) == want
            assert set(images) == set(dm.enumerate_binary(GroundSet.range(n)))
            assert all(dm.is_binary(s) for s in images)
            assert all(nu_inverse(s) == l for l, s in zip(ls, images))

    record(2, "bijection: 3/15/135 subspaces, nu injective onto binary, roundtrip", 10, check)


def test_ac03_graphic_matrices():
    def check():
        for n in (1, 2, 3):
            got = sum(sp.is_graphic(l) for l in sp.enumerate_lagrangians(GroundSet.range(n)))
            assert got == 2 ** (n * (n + 1) // 2)
        for n in (1, 2, 3, 4):
            g = GroundSet.range(n)
            for m in oracles.symmetric_matrices(n):
                a = BitMatrix.from_lists(m)
                assert sp.graphic_matrix(sp.from_symmetric_matrix(g, a)).rows == a.rows

    record(3, "graphic subspaces <-> symmetric matrices", 5, check)


def test_ac04_twist_equivariance():
    def check():
        for n in (1, 2, 3):
            for l in sp.enumerate_lagrangians(GroundSet.range(n)):
                base = nu(l)
                for i in range(n):
                    assert nu(sp.local_dual_mask(l, 1 << i)) == dm.twist_mask(base, 1 << i)

    record(4, "nu(L*e) = nu(L)*e for all L, e, n <= 3", 5, check)


def test_ac05_graphification():
    def check():
        for n in (1, 2, 3):
            for l in sp.enumerate_lagrangians(GroundSet.range(n)):
                assert sp.is_graphic(sp.local_dual(l, sp.graphify(l)))

    record(5, "local_dual(L, graphify(L)) is graphic, n <= 3", 5, check)


def test_ac06_exchange_axiom():
    def check():
        graphs = list(dm.enumerate_framed_graphs(GroundSet.range(4)))
        assert len(graphs) == 1024
        for g in graphs:
            base = dm.nondegeneracy_dm(g)
            for t in range(16):
                assert dm.check_sea(dm.twist_mask(base, t))

    record(6, "exchange axiom for all 1024 framed graphs x 16 twists", 30, check)


def test_ac07_ribbon():
    def check():
        count = 0
        for g in rb.one_vertex_corpus(3):
            for s in range(1 << g.num_edges):
                d = rb.partial_dual_mask(g, s)
                assert nu(rb.pi(d)) == rb.rho(d)
                count += 1
        assert count == 1 + 2 * 2 + 12 * 4 + 120 * 8

    record(7, "nu(pi(G)) = rho(G) on one-vertex graphs <= 3 edges and all partial duals", 60, check)


def test_ac08_hopf_morphism():
    hopf.clear_caches()

    def check():
        res = verify.hopf_morphism(3)
        assert res.passed, res.detail

    record(8, "nu is a bialgebra morphism; Hopf axioms on both sides, degree <= 3", 120, check)


def test_ac09_four_term():
    hopf.clear_caches()

    def check():
        res = verify.four_term(3)
        assert res.passed, res.detail
        assert verify.quotient_dimensions(3) == GOLDEN["quotient_dimensions"]

    record(9, "four-term quotient dimensions agree across sides (golden, both sign conventions)", 120, check)


def test_ac10_properties():
    def check():
        res = verify.properties(3, seed=0, samples=200)
        assert res.passed, res.detail

    record(10, "property suites, exhaustive n <= 3 plus random n = 4", 60, check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
