import json
from pathlib import Path

import pytest

from btspin import named_knot, parse_pd
from btspin.codec import braid_to_diagram, parse_braid, torus_braid

FIXTURES = Path(__file__).parent / "fixtures"


def corpus():
    """The five knots used by the cross-module checks, as diagrams."""
    return {
        "unknot": named_knot("unknot"),
        "trefoil": named_knot("trefoil"),
        "figure8": named_knot("figure8"),
        "T(2,5)": braid_to_diagram(torus_braid(2, 5), name="T(2,5)"),
        "T(3,4)": braid_to_diagram(torus_braid(3, 4), name="T(3,4)"),
    }


def wide_corpus():
    d = corpus()
    for name in ("5_2", "6_1", "granny", "square", "4_1#4_1"):
        d[name] = named_knot(name)
    d["pd-trefoil"] = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)")
    d["braid-figure8"] = braid_to_diagram(parse_braid("1,-2,1,-2", 3))
    return d


@pytest.fixture(scope="session")
def derived():
    return json.loads((FIXTURES / "derived.json").read_text())


@pytest.fixture(scope="session")
def knots():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
