import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from support import grow_map

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_choice = st.tuples(st.integers(0, 10**6), st.integers(0, 10**6), st.booleans())


def sphere_maps(max_edges=8):
    """Hypothesis strategy: planar maps grown edge by edge from a single edge."""
    return st.lists(_choice, max_size=max_edges - 1).map(grow_map)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
