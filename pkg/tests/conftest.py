import itertools

import pytest

from gsftkit.groups import FiniteGroup

ACCEPTANCE_RESULTS = {}


def s3_group():
    """S3 as permutations of {0,1,2}, identity first, composition (p*q)(x) = p(q(x))."""
    perms = [(0, 1, 2)] + [p for p in itertools.permutations(range(3)) if p != (0, 1, 2)]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table), perms


@pytest.fixture
def s3():
    return s3_group()[0]


@pytest.fixture
def z2():
    return FiniteGroup.cyclic(2)


@pytest.fixture
def record_criterion():
    def record(number, ok, detail=""):
        ACCEPTANCE_RESULTS[number] = (ok, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
