import re
from collections import defaultdict

import hypothesis
import pytest

hypothesis.settings.register_profile("ci", deadline=None, max_examples=60)
hypothesis.settings.load_profile("ci")

_ACCEPTANCE = defaultdict(list)
_PATTERN = re.compile(r"test_c(\d+)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or not item.module.__name__.endswith("test_acceptance"):
        return
    match = _PATTERN.match(item.name)
    if match:
        _ACCEPTANCE[int(match.group(1))].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        verdict = "PASS" if all(_ACCEPTANCE[criterion]) else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {criterion:2d}: {verdict}")
