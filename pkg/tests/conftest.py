import os

os.environ.setdefault("DELTALAG_CHECK", "1")

import pytest  # noqa: E402

from deltalag import symplectic  # noqa: E402

symplectic.CHECK_INVARIANTS = True


@pytest.fixture
def worked():
    """The two-element subspace <1^+2+2^, 1+2>."""
    g = symplectic.GroundSet.range(2)
    d1, d2 = symplectic.dual(g, 1), symplectic.dual(g, 2)
    p1, p2 = symplectic.primal(g, 1), symplectic.primal(g, 2)
    return symplectic.make_lagrangian(g, [d1 | p2 | d2, p1 | p2])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[k])
