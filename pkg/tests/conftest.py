import pytest

from bigradedsyz.instances import monomial_nongeneric, gen_instance, generic_fixture, nongeneric_three_point

SEEDS = range(1, 21)

# criterion number -> [(part, ok, detail)]; filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def mono():
    return monomial_nongeneric()


@pytest.fixture(scope="session")
def gfix():
    return generic_fixture()


@pytest.fixture(scope="session")
def ngfix():
    return nongeneric_three_point()


@pytest.fixture(scope="session")
def generic_set():
    return [gen_instance("generic", s) for s in SEEDS]


@pytest.fixture(scope="session")
def nongeneric_set():
    return [gen_instance("nongeneric", s) for s in SEEDS]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p[1] for p in parts)
        failed = "; ".join(f"{name}: {detail}" for name, good, detail in parts if not good)
        detail = failed if failed else "; ".join(f"{name}: {d}" for name, _, d in parts)
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
