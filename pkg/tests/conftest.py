import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from veronese.invariants import count_t
from veronese.lattice import Config

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

WORKED = Config(5, 7, (1, 4, 4, 5, 7))
TABLE_CONFIG = Config(5, 8, (2, 2, 2, 3, 3))


@st.composite
def small_configs(draw, max_n=5, max_d=6, max_t=120):
    n = draw(st.integers(3, max_n))
    d = draw(st.integers(1, max_d))
    caps = draw(st.lists(st.integers(1, d), min_size=n, max_size=n))
    alpha = tuple(sorted(caps))
    if sum(alpha) <= d:
        alpha = alpha[:-1] + (d,)
    c = Config(n, d, alpha)
    assume(count_t(c) <= max_t)
    return c


@pytest.fixture
def worked():
    return WORKED


@pytest.fixture
def table_config():
    return TABLE_CONFIG


_verdicts = pytest.StashKey[dict]()


@pytest.fixture
def verdict(request):
    """Record one acceptance line; printed now and again in the terminal summary."""
    store = request.config.stash.setdefault(_verdicts, {})

    def record(number: int, ok: bool, text: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {text}"
        store[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_verdicts, {})
    if store:
        terminalreporter.section("acceptance")
        for number in sorted(store):
            terminalreporter.write_line(store[number])
