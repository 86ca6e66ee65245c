import pytest

from curvegb.semigroup import compute_parameters, validate_input


@pytest.fixture(scope="session")
def small():
    """(7,8;6): one arithmetic step plus a smaller free generator."""
    return validate_input((7, 8), 6)


@pytest.fixture(scope="session")
def small_params(small):
    return compute_parameters(small)


@pytest.fixture(scope="session")
def wide():
    """(20,...,24;29): four steps, both W and I nonempty."""
    return validate_input((20, 21, 22, 23, 24), 29)


@pytest.fixture(scope="session")
def wide_params(wide):
    return compute_parameters(wide)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
