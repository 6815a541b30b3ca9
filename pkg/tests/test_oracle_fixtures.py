"""The frozen fixture must still agree with a fresh run of its oracles."""

import importlib.util
import json
from pathlib import Path

HERE = Path(__file__).parent


def _oracles():
    spec = importlib.util.spec_from_file_location("make_fixtures", HERE / "oracles" / "make_fixtures.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_fixture_is_reproducible(derived):
    o = _oracles()
    for name, v in o.SEIFERT.items():
        assert derived["alexander"][name] == o.seifert_alexander(v)
    for key, value in derived["h1_order"].items():
        name, m = key.split("|")
        coeffs = derived["alexander"][name]
        assert o.h1_numeric(coeffs, int(m)) == value == o.h1_resultant(coeffs, int(m))
    assert derived["s3_homs_trefoil_orbifold"]["2"] == o.s3_homs_trefoil_orbifold(2)


def test_fixture_file_is_canonical_json(derived):
    text = (HERE / "fixtures" / "derived.json").read_text()
    assert text == json.dumps(derived, indent=2, sort_keys=True) + "\n"
