import pytest

from catcheck import FinSet, FinVect
from catcheck.fincat import FIXTURES
from catcheck.funcat import from_tables

S = FinSet()
V2 = FinVect(2)
V3 = FinVect(3)


def functor(base, I, sizes, tables=None, name=""):
    """Shorthand: ``functor(S, arrow(), {"0": 2, "1": 3}, {"f": [0, 2]})``."""
    return from_tables(base, I, dict(sizes), dict(tables or {}), name=name)


@pytest.fixture(params=[S, V2, V3], ids=lambda B: B.name)
def base(request):
    return request.param


@pytest.fixture(params=sorted(FIXTURES))
def fixture_category(request):
    return FIXTURES[request.param]()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
