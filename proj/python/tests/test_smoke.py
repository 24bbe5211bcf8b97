import json
import math

import pytest

import ntor


def test_torus_bundle_torsion_and_volume():
    r = ntor.catalog("torus-bundle", beta=2)
    assert r["dims"] == [0, 1, 1, 0]
    assert r["raw"].startswith("-2")
    v = ntor.catalog("torus-bundle", op="volume", beta=3)["volume"]
    assert abs(v - 4 * math.sqrt(3) * math.pi) < 1e-6


def test_lens_classes():
    assert ntor.catalog("lens", p=5, q=1)["class"] != ntor.catalog("lens", p=5, q=2)["class"]
    assert ntor.catalog("lens", p=5, q=2)["class"] == "nonresidue"


def test_manifest_round_trip():
    text = ntor.catalog_manifest("seifert", abk="1,1,4", alpha="1/4", beta_root="3/4", gamma="1/4")
    assert ntor.run_manifest(text) == ntor.catalog("seifert", abk="1,1,4", alpha="1/4", beta_root="3/4", gamma="1/4")
    assert json.loads(text)["field"] == "Q(zeta_4)"


def test_errors():
    with pytest.raises(ntor.ValidationError, match="position 2"):
        ntor.reduce_word("x^y", ["x"])
    with pytest.raises(ntor.PreconditionError):
        ntor.catalog("torus-bundle", op="admissible")
    with pytest.raises(ValueError):
        ntor.run_manifest("{not json")
    with pytest.raises(ValueError):
        ntor.catalog("lens", p=6, q=2)


def test_sweep_and_render():
    cols, rows = ntor.sweep("torus-bundle", grid=8)
    assert cols[0] == "u" and rows[-1][0] == "volume"
    assert ntor.sweep("torus-bundle", grid=1)[1] == []
    assert ntor.render("t3", "csv").startswith("key,value\n")


def test_direct_entry_points():
    assert ntor.alexander_polynomial(["x", "y"], ["x y x y^-1 x^-1 y^-1"], [[1], [1]]) == "t^2 - t + 1"
    assert ntor.reduce_word("x y y^-1 x", ["x", "y"]) == "x^2"
    assert ntor.canonical_class("t^3 * (2 + t)*(2 + t^-1)", "Q(t)", "norms+monomials") == \
        ntor.canonical_class("1", "Q(t)", "norms+monomials")
