import sys
from dataclasses import dataclass

import pytest

from narrowres.core import Cnf
from narrowres.expand import expand
from narrowres.formats import ResProof, TreeDnfProof
from narrowres.gen import acceptance_corpus, prove_bounded


@dataclass
class Item:
    name: str
    cnf: Cnf
    res: ResProof
    tree: TreeDnfProof


@pytest.fixture(scope="session")
def corpus() -> list[Item]:
    items = []
    for name, f in acceptance_corpus():
        p = prove_bounded(f, f.num_vars)
        items.append(Item(name, f, p, expand(f, p)))
    return items


@pytest.fixture
def xnx():
    """(x) and (not x) with its 3-line refutation."""
    from narrowres.formats import parse_res_proof

    return Cnf.from_lists([[1], [-1]]), parse_res_proof("1 i 1 0\n2 i -1 0\n3 r 1 2 1 0\n")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
