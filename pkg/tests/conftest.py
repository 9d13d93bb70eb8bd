import pytest

from siegeldim import jacobi


@pytest.fixture(scope="session")
def appendix():
    return jacobi.verify_appendix()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
