from collections import Counter

import pytest

from btspin import DiagramError, ParseError, emit_pd, named_knot, parse_gauss, parse_pd
from btspin.codec import (
    BraidWord,
    braid_to_diagram,
    canonical_name,
    known_names,
    parse_braid,
    torus_braid,
    torus_parameters,
)
from btspin.invariants import knot_alexander, knot_determinant
from conftest import wide_corpus
from diagram_moves import add_kink

KNOTATLAS_TREFOIL = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"


def test_trefoil_pd():
    d = parse_pd(KNOTATLAS_TREFOIL)
    assert d.crossing_count == 3
    assert d.arcs == 6
    assert abs(d.writhe) == 3


def test_three_two_edge_loops_is_not_a_knot():
    # each crossing closes a 2-edge loop on itself, so the code has 3 components
    with pytest.raises(DiagramError):
        parse_pd("X(1,4,2,3),X(3,6,4,5),X(5,2,6,1)")


def test_empty_pd_is_trivial():
    d = parse_pd("")
    assert d.is_trivial_diagram() and d.crossing_count == 0


@pytest.mark.parametrize("bad", ["X(1,2,3)", "X(1,2,3,4,5)", "X(1,2,3,x)", "Y(1,2,3,4)", "X(1,1,1,1)"])
def test_malformed_pd(bad):
    with pytest.raises((ParseError, DiagramError)):
        parse_pd(bad)


def test_label_multiplicity_checked():
    with pytest.raises(DiagramError):
        parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,7)")


def test_knotatlas_bracket_syntax():
    assert parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == parse_pd(KNOTATLAS_TREFOIL)


@pytest.mark.parametrize("name,d", sorted(wide_corpus().items()))
def test_each_label_twice_and_round_trip(name, d):
    counts = Counter(x for c in d.crossings for x in c.labels)
    assert all(v == 2 for v in counts.values())
    assert sorted(counts) == list(range(1, d.arcs + 1))
    assert parse_pd(emit_pd(d)) == d


def test_relabeling_is_canonical():
    shifted = "X(11,14,12,15),X(13,16,14,11),X(15,12,16,13)"
    assert parse_pd(shifted) == parse_pd(KNOTATLAS_TREFOIL)


def test_mirror_flips_writhe():
    d = named_knot("trefoil")
    assert d.mirror().writhe == -d.writhe
    assert d.mirror().mirror() == d


def test_gauss_trefoil():
    d = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")
    assert d.crossing_count == 3
    assert d.writhe == 3
    assert knot_determinant(d) == 3


def test_gauss_figure8():
    d = parse_gauss("O1-,U2-,O3+,U4+,O2-,U1-,O4+,U3+")
    assert knot_determinant(d) == 5


@pytest.mark.parametrize("bad", ["O1+,U2+", "O1+,O1+", "O1+,U1-", "Q1+"])
def test_gauss_errors(bad):
    with pytest.raises((ParseError, DiagramError)):
        parse_gauss(bad)


def test_braid_parsing():
    assert parse_braid("1,1,1", 2) == BraidWord(2, (1, 1, 1))
    assert parse_braid("1,-2,1,-2", 3).letters == (1, -2, 1, -2)
    with pytest.raises(ParseError):
        parse_braid("2", 2)
    with pytest.raises(DiagramError):
        parse_braid("1,1", 2)  # closes to a 2-component link


def test_braid_figure8_determinant():
    d = braid_to_diagram(parse_braid("1,-2,1,-2", 3))
    assert knot_determinant(d) == 5


def test_torus_braid():
    assert torus_braid(2, 3) == BraidWord(2, (1, 1, 1))
    assert torus_braid(3, 5) == BraidWord(3, (1, 2) * 5)
    with pytest.raises(ParseError):
        torus_braid(2, 4)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)])
def test_torus_crossing_count(p, q):
    assert braid_to_diagram(torus_braid(p, q)).crossing_count == (p - 1) * q


def test_empty_braid():
    assert braid_to_diagram(BraidWord(1, ())).crossing_count == 0


def test_named_table():
    assert canonical_name("3_1") == "3_1"
    assert named_knot("3_1") == named_knot("trefoil")
    assert canonical_name("figure-eight") == "figure8"
    assert torus_parameters("T(3,2)") == (2, 3)
    assert torus_parameters("4_1") is None
    for name in ("unknot", "trefoil", "3_1", "figure8", "4_1", "T(2,3)"):
        assert name in known_names() or torus_parameters(name)
    with pytest.raises(ParseError):
        named_knot("nope")
    with pytest.raises(ParseError):
        named_knot("T(-2,3)")


@pytest.mark.parametrize("positive", [True, False])
@pytest.mark.parametrize("edge", [1, 2, 5])
def test_kink_adds_one_crossing_and_keeps_alexander(edge, positive):
    d = named_knot("trefoil")
    k = add_kink(d, edge, positive)
    assert k.crossing_count == 4
    assert k.writhe == d.writhe + (1 if positive else -1)
    assert knot_alexander(k) == knot_alexander(d)
