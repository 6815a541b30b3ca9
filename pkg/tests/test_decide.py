import math
import random

import pytest

from btspin import LabelError, named_knot
from btspin.decide import RULES, RULES_BY_ID, Outcome, decide, invariant_report
from btspin.groups import BtSpinSpec, KnotClass, MNPair, normalize_mn
from btspin.invariants import knot_determinant
from diagram_moves import add_kink


def spec(name, m, n=1, **labels):
    return BtSpinSpec.named(name, normalize_mn(m, n), **labels)


def torus(p, q, m, n=1):
    return BtSpinSpec((p, q), normalize_mn(m, n))


def test_unknot_vs_trefoil():
    v = decide(spec("unknot", 2), spec("trefoil", 2))
    assert v.outcome is Outcome.DISTINCT and v.decisive.rule == "R-T1"


def test_torus_pair_determinants():
    v = decide(torus(2, 3, 2), torus(2, 5, 2))
    assert v.outcome is Outcome.DISTINCT
    assert v.decisive.rule == "R-D1"
    assert v.decisive.evidence["determinants"] == [3, 5]
    assert "R-TT" in v.rules


def test_trefoil_vs_figure8():
    v = decide(spec("trefoil", 2), spec("figure8", 2))
    assert v.outcome is Outcome.DISTINCT
    assert v.rules[:2] == ["R-T2t", "R-D1"]
    assert v.justification[1].role == "corroborating"
    assert v.justification[1].evidence["determinants"] == [3, 5]


def test_figure8_identical_reduces():
    a = spec("figure8", 5, 2)
    v = decide(a, a)
    assert v.outcome is Outcome.REDUCES_TO_1KNOT and v.decisive.rule == "R-H"


def test_special_pairs():
    assert decide(spec("trefoil", 1), spec("figure8", 1)).outcome is Outcome.EQUIVALENT
    v = decide(spec("trefoil", 0), spec("figure8", 0))
    assert v.outcome is Outcome.REDUCES_TO_1KNOT and v.decisive.rule == "R-01"
    # a composite spun knot is not covered by R-01
    assert decide(spec("granny", 0), spec("figure8", 0)).outcome is Outcome.UNKNOWN


def test_different_m():
    v = decide(spec("trefoil", 2), spec("figure8", 3))
    assert v.decisive.rule == "R-M"
    # the trivial 2-knot arises for every m from the unknot: no R-M there
    assert decide(spec("unknot", 2), spec("unknot", 3)).outcome is not Outcome.DISTINCT


def test_unknown_labels_use_computed_certificates():
    a = BtSpinSpec(named_knot("figure8"), MNPair(2, 1))  # class unknown
    v = decide(spec("unknot", 2), a)
    assert v.decisive.rule == "R-T1"
    assert "Alexander polynomial" in v.decisive.evidence["non_trivial"]


def test_composite_and_satellite_rules():
    v = decide(spec("granny", 2), spec("figure8", 2))
    assert v.decisive.rule == "R-T2c"
    # 6_1 is hyperbolic; the satellite label here only drives the rule logic
    sat = BtSpinSpec(named_knot("6_1"), MNPair(3, 1), KnotClass.SATELLITE)
    v = decide(spec("figure8", 3), sat)
    assert v.decisive.rule == "R-T3"
    # the hyperbolic/satellite rule needs m >= 3
    sat2 = BtSpinSpec(named_knot("6_1"), MNPair(2, 1), KnotClass.SATELLITE)
    assert "R-T3" not in decide(spec("figure8", 2), sat2).rules


def test_hom_rule_decisive():
    # m = 3 is odd and both knots are composite, so only the orbifold hom counts apply
    v = decide(spec("granny", 3), spec("3_1#5_1", 3))
    assert v.outcome is Outcome.DISTINCT and v.decisive.rule == "R-HOM"
    assert v.decisive.evidence == {"m": 3, "group": "A4", "hom_counts": [129, 33]}


def test_hom_rule_guard():
    for s in (torus(2, 3, 3), spec("unknot", 3)):
        assert RULES_BY_ID["R-HOM"].check(s, spec("figure8", 3)) is None


def test_equal_invariants_stay_unknown():
    a = spec("granny", 3)
    b = spec("4_1#4_1", 3)
    assert decide(a, b).outcome is Outcome.UNKNOWN


def test_r_d1_needs_different_determinants():
    assert RULES_BY_ID["R-D1"].check(spec("granny", 2), spec("square", 2)) is None


def test_r_d2():
    ev = RULES_BY_ID["R-D2"].check(spec("trefoil", 2), spec("figure8", 3))
    assert ev is not None
    assert RULES_BY_ID["R-D2"].check(torus(3, 5, 2), spec("figure8", 3)) is None


def test_r_tt_both_odd():
    v = decide(torus(2, 3, 4), torus(3, 5, 4))
    assert "R-TT" in v.rules and v.outcome is Outcome.DISTINCT


def test_mislabeled_inputs_rejected():
    bad = BtSpinSpec(named_knot("figure8"), MNPair(2, 1), KnotClass.TORUS, torus=(2, 3))
    with pytest.raises(LabelError):
        decide(bad, spec("unknot", 2))
    kinked = add_kink(named_knot("trefoil"), 1)
    fake = BtSpinSpec(kinked, MNPair(2, 1), KnotClass.TORUS, torus=(2, 5))
    with pytest.raises(LabelError):
        decide(fake, spec("figure8", 2))


def test_verdict_serialization():
    v = decide(spec("trefoil", 2), spec("figure8", 2))
    js = v.to_json()
    assert js["outcome"] == "DISTINCT" and js["rules"] == v.rules
    assert "R-T2t" in v.to_text()


def test_report_examples(derived):
    rep = invariant_report(spec("trefoil", 2))
    assert rep["alexander"] == "t^2 - t + 1"
    assert (rep["determinant"], rep["beta"], rep["branched_cover_h1_order"]) == (3, 1, 3)
    assert rep["orbifold_hom_counts"] is None  # torus knot: guard off
    rep = invariant_report(spec("unknot", 3))
    assert (rep["alexander"], rep["determinant"], rep["branched_cover_h1_order"]) == ("1", 1, 1)
    assert rep["abelianization"]["orbifold_group"] == "Z/3"
    rep = invariant_report(spec("figure8", 3))
    assert rep["branched_cover_h1_order"] == derived["h1_order"]["figure8|3"]
    assert rep["orbifold_hom_counts"]["Z/3"] == 3


# -- fuzzing ---------------------------------------------------------------------

def _label_options(name):
    unknown = dict(class_label=KnotClass.UNKNOWN, figure_eight=False)
    return {
        "unknot": [{}, unknown],
        "trefoil": [{}, unknown, dict(class_label=KnotClass.UNKNOWN, prime=True)],
        "figure8": [{}, unknown, dict(class_label=KnotClass.UNKNOWN, figure_eight=False, prime=True)],
        "5_2": [{}, unknown, dict(sufficiently_large=True)],
        "6_1": [{}, unknown],
        "granny": [{}, unknown, dict(class_label=KnotClass.UNKNOWN, prime=False)],
        "4_1#4_1": [{}, unknown],
        "3_1#5_1": [{}, unknown],
    }[name]


def _random_mn(rng):
    m = rng.choice([0, 1, 2, 2, 3, 3, 4, 5])
    if m < 2:
        return m, 1
    return m, rng.choice([n for n in range(1, 2 * m) if math.gcd(m, n) == 1])


def _random_spec(rng, mn=None):
    m, n = mn or _random_mn(rng)
    if rng.random() < 0.25:
        p, q = rng.choice([(2, 3), (2, 5), (3, 4), (3, 5)])
        return torus(p, q, m, n)
    name = rng.choice(["unknot", "trefoil", "figure8", "5_2", "6_1", "granny", "4_1#4_1", "3_1#5_1"])
    return spec(name, m, n, **rng.choice(_label_options(name)))


def _random_pair(rng):
    """Two random specs; most pairs share (m, n) so the same-m rules get exercised."""
    a = _random_spec(rng)
    shared = (a.mn.m, a.mn.n) if rng.random() < 0.6 else None
    return a, _random_spec(rng, shared)


def test_symmetry_and_identity_fuzz():
    rng = random.Random(20261015)
    for _ in range(1000):
        a, b = _random_pair(rng)
        ab, ba = decide(a, b), decide(b, a)
        assert ab.outcome is ba.outcome, (a, b)
        assert ab.rules == ba.rules
        assert decide(a, a).outcome is not Outcome.DISTINCT
        # the chain lists exactly the firing rules with the verdict's outcome
        if ab.outcome is not Outcome.UNKNOWN:
            fired = [r.id for r in RULES if r.outcome is ab.outcome and r.check(a, b) is not None]
            assert ab.rules == fired
        if "R-D1" in ab.rules:
            d1 = next(f for f in ab.justification if f.rule == "R-D1")
            da, db = d1.evidence["determinants"]
            assert da != db
            assert sorted([da, db]) == sorted([knot_determinant(a.diagram), knot_determinant(b.diagram)])
