import numpy as np
import pytest

from zerofree.criteria import certify_a2, mobius_arg_sup_batch
from zerofree.permanent import permanent_exact

_ACCEPTANCE = []


def record(number: int, name: str, passed: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((number, name, passed, detail))


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the jitted kernels once so timing checks measure steady state."""
    certify_a2([1.0, 1 + 0.1j, 1 - 0.1j])
    mobius_arg_sup_batch([1.0], [1.0], [1.0], [1.0])
    permanent_exact(np.ones((3, 3)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  [{number}] {name}  {detail}")
