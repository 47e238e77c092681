import sys

import pytest
from hypothesis import settings

from sgpatterns import census

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def census8():
    return census(8)


@pytest.fixture(scope="session")
def census10():
    return census(10)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
