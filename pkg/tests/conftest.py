import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fuzzynet import (  # noqa: E402
    BinaryContext,
    Domain,
    FuzzyClass,
    SystemAttribute,
    make_area,
    read_kb,
    system_value,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

PROCEDURES = (
    "EraseWithMenu",
    "EraseWithKey",
    "Select",
    "CutWithMenu",
    "SelectToGoThrough",
    "SelectToDelimit",
)

ERASE_N = {"EraseWithMenu": 1, "EraseWithKey": 0.9, "CutWithMenu": 0.6}
ERASE_P = {"EraseWithMenu": 1, "EraseWithKey": 1, "CutWithMenu": 0.8}
SELECT_N = {"SelectToGoThrough": 1, "SelectToDelimit": 0.8}
SELECT_P = {"SelectToGoThrough": 1, "SelectToDelimit": 1}
GUM = {"EraseWithMenu": 1, "EraseWithKey": 0.7, "CutWithMenu": 0.5}
REMOVE_N = {"EraseWithMenu": 0.8, "CutWithMenu": 1}
REMOVE_P = {"EraseWithMenu": 1, "CutWithMenu": 1}


@pytest.fixture
def procedure():
    return Domain("procedure", PROCEDURES)


@pytest.fixture
def erase(procedure):
    return system_value("Erase", procedure, ERASE_N.items(), ERASE_P.items())


@pytest.fixture
def select(procedure):
    return system_value("Select", procedure, SELECT_N.items(), SELECT_P.items())


@pytest.fixture
def remove(procedure):
    return system_value("Remove", procedure, REMOVE_N.items(), REMOVE_P.items())


@pytest.fixture
def gum(procedure):
    return make_area("user", procedure, GUM.items())


@pytest.fixture
def goal(procedure, erase, select):
    return SystemAttribute("goal", procedure, [erase, select])


@pytest.fixture
def erase_class(goal):
    return FuzzyClass("EraseCommand", [goal.restrict(["Erase"])])


@pytest.fixture
def kb_path():
    return FIXTURES / "examples_kb.json"


@pytest.fixture
def kb(kb_path):
    return read_kb(kb_path)


@pytest.fixture
def identity_ctx():
    return BinaryContext(("o1", "o2"), ("p1", "p2"), ((True, False), (False, True)))


def random_context(rng: random.Random, max_objects=10, max_properties=10, density=None):
    n = rng.randint(0, max_objects)
    m = rng.randint(0, max_properties)
    p = rng.random() if density is None else density
    return BinaryContext(
        tuple(f"o{i}" for i in range(n)),
        tuple(f"p{j}" for j in range(m)),
        tuple(tuple(rng.random() < p for _ in range(m)) for _ in range(n)),
    )


# acceptance summary: one line per criterion, printed after the run

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
