import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from kinconv.convert import convert
from kinconv.documents import (
    DocumentError,
    dumps,
    load_model,
    parse_document,
    read_document,
    save_model,
    to_document,
)
from kinconv.model import DHModel, GJDModel, ModelError, P, PoEModel, R, RpyXyzModel
from kinconv.samples import RRPR_M, rrpr_dh, rrpr_poe, rrpr_rpyxyz, three_r_poe

from helpers import random_dh, random_gjd
from fixtures import three_r_dh_printed
from kinconv.se3 import nearest_se3

DATA = __import__("pathlib").Path(__file__).resolve().parent.parent / "data"


def model_arrays(model):
    doc = to_document(model)
    doc.pop("name")
    return doc


def assert_same_model(a, b, atol=1e-12):
    da, db = model_arrays(a), model_arrays(b)
    assert da.keys() == db.keys()
    for key in da:
        if key in ("representation", "units", "kinds"):
            assert da[key] == db[key]
        elif key == "rows" and isinstance(a, DHModel):
            assert [r[4] for r in da[key]] == [r[4] for r in db[key]]
            assert_allclose([r[:4] for r in da[key]], [r[:4] for r in db[key]], atol=atol)
        else:
            assert_allclose(da[key], db[key], atol=atol)


def test_load_rrpr_poe_fixture():
    poe = load_model(DATA / "rrpr_poe.json")
    assert isinstance(poe, PoEModel)
    assert poe.n == 4
    assert_allclose(poe.m, RRPR_M)


def test_five_component_screw_is_rejected():
    doc = to_document(rrpr_poe())
    doc["screws"][1] = doc["screws"][1][:5]
    with pytest.raises(DocumentError, match="screw must have 6 components"):
        parse_document(doc, "x.json")


def test_dh_document_with_tool(tmp_path):
    printed = three_r_dh_printed(tool=nearest_se3(three_r_dh_printed().tool))
    path = tmp_path / "three_r_dh.json"
    save_model(printed, path, "three_r")
    loaded = read_document(path)
    assert loaded.name == "three_r"
    assert loaded.model.kinds == (R, R, R)
    assert_same_model(loaded.model, printed, atol=0)


@pytest.mark.parametrize("factory", [rrpr_dh, rrpr_poe, rrpr_rpyxyz, three_r_poe])
def test_round_trip_reference_models(factory, tmp_path):
    model = factory()
    save_model(model, tmp_path / "m.json")
    assert_same_model(load_model(tmp_path / "m.json"), model)
    g = convert(model, "gjd")
    save_model(g, tmp_path / "g.json")
    assert_same_model(load_model(tmp_path / "g.json"), g)


def test_round_trip_random_models(rng, tmp_path):
    path = tmp_path / "m.json"
    for n in range(1, 9):
        for model in (random_dh(rng, n), random_gjd(rng, n)):
            for target in ("dh", "poe", "rpyxyz", "gjd"):
                out = convert(model, target)
                save_model(out, path)
                assert_same_model(load_model(path), out)


def test_gjd_document_shape():
    doc = to_document(GJDModel([np.eye(4)] * 3, [R, P, R]))
    assert len(doc["frames"]) == 3
    assert all(len(f) == 16 for f in doc["frames"])
    assert len(doc["tool"]) == 16
    assert doc["kinds"] == ["revolute", "prismatic", "revolute"]


def test_prismatic_omega_is_exact_zero():
    doc = to_document(convert(rrpr_dh(), "poe"))
    assert doc["screws"][2][:3] == [0.0, 0.0, 0.0]


def test_dumps_is_valid_json_with_row_per_line():
    text = dumps(to_document(rrpr_dh(), "rrpr"))
    assert json.loads(text)["name"] == "rrpr"
    assert text.count("\n") > 6


@pytest.mark.parametrize(
    "mutate,match",
    [
        (lambda d: d.update(representation="mdh"), "unknown tag"),
        (lambda d: d.pop("m"), "m: missing field"),
        (lambda d: d.update(units={"angle": "deg", "length": "m"}), "units"),
        (lambda d: d["screws"][0].__setitem__(2, "one"), r"screws\[0\]\[2\]"),
        (lambda d: d.update(m=[1, 0, 0]), "expected 16 numbers"),
    ],
)
def test_parse_errors_name_the_field(mutate, match):
    doc = to_document(rrpr_poe())
    mutate(doc)
    with pytest.raises(DocumentError, match=match):
        parse_document(doc, "robot.json")


def test_json_syntax_error_has_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"representation": "poe",\n "m": [1, 2,,]}')
    with pytest.raises(DocumentError, match=r"broken.json: line 2, column"):
        read_document(path)


def test_invalid_model_is_reported_with_file(tmp_path):
    with pytest.raises(ModelError, match="bad_screw.json: screws"):
        load_model(DATA / "bad_screw.json")
    assert read_document(DATA / "bad_screw.json", check=False).model.n == 1


def test_save_refuses_invalid_model(tmp_path):
    bad = PoEModel(np.eye(4), [(0, 0, 0.5, 0, 0, 0)])
    with pytest.raises(ModelError):
        save_model(bad, tmp_path / "bad.json")
    assert not list(tmp_path.iterdir())


def test_rpyxyz_kinds_accept_short_tags():
    doc = to_document(rrpr_rpyxyz())
    doc["kinds"] = ["R", "r", "P", "revolute"]
    assert parse_document(doc).model.kinds == (R, R, P, R)
    assert isinstance(parse_document(doc).model, RpyXyzModel)
