import itertools
import sys

import pytest

from agmonoids import CayleyTable, Permutation

EXAMPLE1_ROWS = [
    [0, 1, 2, 3, 4, 5],
    [1, 5, 2, 3, 4, 0],
    [2, 2, 2, 3, 3, 2],
    [3, 3, 3, 3, 3, 3],
    [4, 4, 3, 3, 4, 4],
    [5, 0, 2, 3, 4, 1],
]
EXAMPLE2_ROWS = [
    [0, 1, 2, 3, 4, 5],
    [5, 0, 2, 3, 4, 1],
    [4, 4, 3, 3, 4, 4],
    [3, 3, 3, 3, 3, 3],
    [2, 2, 2, 3, 3, 2],
    [1, 5, 2, 3, 4, 0],
]


@pytest.fixture
def ex1():
    return CayleyTable(EXAMPLE1_ROWS)


@pytest.fixture
def ex2():
    return CayleyTable(EXAMPLE2_ROWS)


@pytest.fixture
def alpha():
    return Permutation([0, 5, 4, 3, 2, 1])


@pytest.fixture
def c3():
    return CayleyTable([[0, 1, 2], [1, 2, 0], [2, 0, 1]])


@pytest.fixture
def left_zero():
    return CayleyTable([[0, 0], [1, 1]])


@pytest.fixture
def trivial():
    return CayleyTable([[0]])


def all_fixing(n, fixed=0):
    """Every permutation of 0..n-1 fixing ``fixed``, by plain enumeration."""
    others = [x for x in range(n) if x != fixed]
    for arr in itertools.permutations(others):
        images = list(range(n))
        for x, y in zip(others, arr):
            images[x] = y
        yield Permutation(images)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}: {name} {detail}".rstrip())
