import pytest

from equivariant_sw import fixtures
from equivariant_sw.reps import ModelSpec


def brute_inverse(a: int, p: int) -> int:
    """Exhaustive search over F_p; independent of extended Euclid."""
    hits = [b for b in range(p) if (a * b) % p == 1]
    assert len(hits) == 1
    return hits[0]


def brute_quotient(num: int, den: int, p: int) -> int:
    """The unique x in F_p with x * den = num."""
    hits = [x for x in range(p) if (x * den - num) % p == 0]
    assert len(hits) == 1
    return hits[0]


@pytest.fixture
def k3():
    return fixtures.get("k3-fermat-z3").model()


@pytest.fixture
def zhang():
    return fixtures.get("zhang-z3").model(chamber="plus")


@pytest.fixture
def z5():
    return fixtures.get("z5-local").model()


@pytest.fixture
def ex1_raw():
    # Example 1 weights without SW values
    return ModelSpec.build(3, [3, 1, 1], [1, 1, 1], h0=3, h=[0, 0, 0])


@pytest.fixture
def ex2_raw():
    return ModelSpec.build(3, [1, 2, 2], [1, 1, 1], h0=1, h=[0, 1, 0])


# one PASS/FAIL line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
