import json
import math

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from btspin import CapExceeded, FinitePresentation, named_knot, wirtinger_presentation
from btspin.finite import (
    FiniteGroupTable,
    abelianization,
    brute_force_count,
    builtin_group,
    builtin_groups,
    count_homs,
    cyclic_group,
    enumerate_homs,
    smith_normal_form,
)
from btspin.groups import orbifold_group
from btspin.wirtinger import tietze_simplify
from conftest import corpus

SMALL = [G for G in builtin_groups() if G.order <= 8]


@pytest.mark.parametrize("G", builtin_groups(), ids=lambda G: G.name)
def test_builtin_tables_are_groups(G):
    G.validate()
    assert sum(len(c) for c in G.conjugacy_classes()) == G.order


def test_lookups():
    assert builtin_group("SL(2,Z3)").order == 24
    assert builtin_group("Z/5").order == 5
    q8 = builtin_group("Q8")
    orders = sorted(q8.element_order(g) for g in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    with pytest.raises(KeyError):
        builtin_group("M11")


def test_json_round_trip():
    G = builtin_group("A4")
    assert FiniteGroupTable.from_json(json.dumps(G.to_json())).mul == G.mul


def test_invalid_table_rejected():
    with pytest.raises(ValueError):
        FiniteGroupTable.from_json({"name": "bad", "order": 2, "mul": [0, 1, 1, 1]})


def test_count_examples():
    x = FinitePresentation(("x",), ())
    for G in builtin_groups():
        assert count_homs(x, G) == G.order
    x2 = FinitePresentation(("x",), ((1, 1),))
    assert enumerate_homs(x2, cyclic_group(4)) == [(0,), (2,)]
    for m in range(1, 7):
        for k in range(1, 7):
            assert count_homs(FinitePresentation(("x",), ((1,) * m,)), cyclic_group(k)) == math.gcd(m, k)
    assert count_homs(orbifold_group(FinitePresentation(("x1",), ()), 3), builtin_group("S3")) == 3


def test_trefoil_orbifold_s3(derived):
    p = orbifold_group(wirtinger_presentation(named_knot("trefoil")), 2)
    s3 = builtin_group("S3")
    assert count_homs(p, s3) == derived["s3_homs_trefoil_orbifold"]["2"]
    assert brute_force_count(p, s3) == derived["s3_homs_trefoil_orbifold"]["2"]
    homs = enumerate_homs(p, s3)
    assert any(len(set(h)) == 3 for h in homs)  # images of all 3 meridians distinct: onto S3
    unknot = orbifold_group(FinitePresentation(("x1",), ()), 2)
    assert count_homs(unknot, s3) < len(homs)


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=6).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.lists(words, max_size=3))
def test_pruned_matches_brute_force(ngens, rels):
    rels = [tuple(x for x in r if abs(x) <= ngens) for r in rels]
    rels = [r for r in rels if r]
    p = FinitePresentation.numbered(ngens, rels)
    for G in SMALL:
        assert count_homs(p, G, simplify=False) == brute_force_count(p, G)
        assert count_homs(p, G) == brute_force_count(p, G)


@pytest.mark.parametrize("name", sorted(corpus()))
@pytest.mark.parametrize("m", [2, 3])
def test_conjugacy_fast_path(name, m):
    p = tietze_simplify(orbifold_group(wirtinger_presentation(corpus()[name]), m))
    for G in SMALL + [builtin_group("A4")]:
        fast = count_homs(p, G, simplify=False, conjugate_generators=True)
        assert fast == count_homs(p, G, simplify=False)


def test_caps():
    p = FinitePresentation.numbered(3, [])
    with pytest.raises(CapExceeded):
        count_homs(p, builtin_group("SL(2,Z3)"), max_order=8)
    with pytest.raises(CapExceeded):
        count_homs(p, builtin_group("S3"), max_gens=2)


def test_cap_env(monkeypatch):
    monkeypatch.setenv("BTSPIN_HOM_CAP", "1")
    with pytest.raises(CapExceeded):
        count_homs(FinitePresentation.numbered(2, []), builtin_group("S3"))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=0, max_size=4)
    .map(lambda rows: (rows, c))))
def test_snf_matches_sympy(args):
    rows, ncols = args
    ours = smith_normal_form(rows, ncols)
    assert len(ours) == ncols
    for a, b in zip(ours, ours[1:]):
        assert b == 0 or (a != 0 and b % a == 0)
    if rows:
        ref = sympy_snf(sp.Matrix(rows), domain=sp.ZZ)
        ref_diag = sorted(abs(int(ref[i, i])) for i in range(min(ref.shape)))
    else:
        ref_diag = []
    ref_diag = ref_diag + [0] * (ncols - len(ref_diag))
    key = lambda d: sorted(x for x in d if x != 1)  # noqa: E731
    assert key(ours) == key(ref_diag)


def test_smith_strings():
    assert str(abelianization(FinitePresentation(("x",), ()))) == "Z"
    assert smith_normal_form([], 1) == [0]
    assert str(abelianization(FinitePresentation.numbered(3, [(1, 1), (2, 2)]))) == "Z + Z/2 + Z/2"
    assert str(abelianization(FinitePresentation.numbered(1, [(1,)]))) == "1"


@pytest.mark.parametrize("name", sorted(corpus()))
def test_orbifold_abelianization_diagonal(name):
    w = wirtinger_presentation(corpus()[name])
    for m in (2, 3, 4):
        diag = smith_normal_form(orbifold_group(w, m).exponent_matrix(), w.generator_count)
        assert diag == [1] * (w.generator_count - 1) + [m]


@pytest.mark.parametrize("name", sorted(corpus()))
@pytest.mark.parametrize("m", range(2, 7))
def test_cyclic_counts_gcd(name, m):
    w = wirtinger_presentation(corpus()[name])
    for k in range(1, 7):
        assert count_homs(orbifold_group(w, m), cyclic_group(k)) == math.gcd(m, k)
