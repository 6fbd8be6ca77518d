import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "quadrect",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("quadrect")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name:
                label = name.split("::test_criterion_", 1)[1]
                num = label.split("_", 1)[0]
                outcome = "PASS" if status == "passed" else "FAIL"
                lines[int(num)] = f"acceptance criterion {int(num)}: {outcome}"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(lines):
            terminalreporter.write_line(lines[num])
