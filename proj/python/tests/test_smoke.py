import json
import os
import pathlib

import pytest

import chevalley_chow as cc

FIXTURES = pathlib.Path(os.environ.get("CHEVCHOW_FIXTURE_DIR", pathlib.Path(__file__).parents[2] / "fixtures"))


def fixture(name):
    return FIXTURES / f"{name}.json"


def test_every_fixture_validates():
    names = sorted(p.stem for p in FIXTURES.glob("*.json"))
    assert len(names) >= 10
    for name in names:
        ok, result = cc.run("validate", fixture(name))
        assert ok, name
        assert result["ok"] is True


def test_picard_of_pgl2_product():
    r = cc.picard(fixture("product_pgl2"))
    assert r["ns"] == {"rank": 1, "torsion": [2]}


def test_dict_and_text_inputs_agree():
    text = fixture("a2").read_text()
    as_dict = json.loads(text)
    assert cc.chow(text) == cc.chow(as_dict) == cc.chow(str(fixture("a2")))


def test_canonical_form_is_a_fixed_point():
    once = cc.load(fixture("sl3_semiabelian"))
    assert cc.load(once) == once


def test_homogeneous_commands():
    assert cc.hchow(fixture("ex_nlt"), "H", max_degree=3)["dims"] == [1, 0, 0, 0]
    assert cc.complete(fixture("sl3_semiabelian"), "B")["answer"] == "yes"
    s = cc.structure(fixture("ex_nlt"), "H")
    assert {"albanese_split", "fibration", "complete", "affine"} <= s.keys()


def test_report_envelope():
    out = json.loads(cc.report("picard", fixture("semiabelian")))
    assert out["schema"] == cc.SCHEMA
    assert out["command"] == "picard"
    assert "ns:" in cc.report("picard", fixture("semiabelian"), format="text")


def test_syntax_error_position():
    with pytest.raises(cc.DescriptorSyntaxError) as e:
        cc.load('{"group": ')
    assert e.value.line == 1
    assert isinstance(e.value, cc.Error)


def test_schema_error_path():
    doc = json.loads(fixture("semiabelian").read_text())
    doc["group"]["gluing"]["xd_rnk"] = doc["group"]["gluing"].pop("xd_rank")
    with pytest.raises(cc.SchemaError) as e:
        cc.load(doc)
    assert "gluing.xd_rnk" in e.value.path


def test_invalid_descriptor():
    doc = json.loads(fixture("semiabelian").read_text())
    doc["group"]["gluing"]["v"] = [[2]]
    ok, _ = cc.run("validate", doc)
    assert not ok
    with pytest.raises(cc.ValidationFailed) as e:
        cc.picard(doc)
    assert json.loads(e.value.report_json)["ok"] is False


def test_unknown_subgroup():
    with pytest.raises(cc.Error):
        cc.complete(fixture("a2"), "missing")
