import sys

import pytest

from kunzcount.oracle import Oracle


@pytest.fixture(scope="session")
def oracle():
    return Oracle(max_genus=18)


def pytest_terminal_summary(terminalreporter):
    module = next((mod for name, mod in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
