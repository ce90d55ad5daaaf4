import random

import pytest

from psirr import GF, QQ, ZPoly


def random_zpoly(rng, ctx, n, d, max_exp=4, max_terms=5, trunc=None):
    """Monic P with a handful of random terms below Z^d (may be Z^d itself)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        j = rng.randrange(d)
        alpha = tuple(rng.randint(0, max_exp) for _ in range(n))
        terms[(alpha, j)] = ctx.random_element(rng, nonzero=True)
    return ZPoly.from_terms(ctx, n, d, terms, trunc)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=["Q", 5, 7], ids=["Q", "F5", "F7"])
def field(request):
    return QQ if request.param == "Q" else GF(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
