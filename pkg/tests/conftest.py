import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from opgraph.corpus import random_graph, random_relabeling  # noqa: E402
from opgraph.dynamics import build_graph, parse_system  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


def read(name):
    return (DATA / name).read_text()


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def four_point_semicrossed():
    return build_graph(parse_system(read("four_point_semicrossed.sys")))


@pytest.fixture
def four_point_tensor():
    return build_graph(parse_system(read("four_point_tensor.sys")))


@pytest.fixture
def three_loops():
    return build_graph(parse_system(read("three_loops.sys")))


def make_corpus(seed=20240607, n_base=25):
    """Base graphs followed by one random relabeling of each."""
    rng = random.Random(seed)
    base = [random_graph(rng) for _ in range(n_base)]
    relabeled = [random_relabeling(rng, g)[0] for g in base]
    return base + relabeled


@pytest.fixture(scope="session")
def corpus():
    return make_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
