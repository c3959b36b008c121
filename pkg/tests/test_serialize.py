import json

import jsonschema
import pytest
from hypothesis import given, settings

from schurmult.errors import AlgebraError, NotAssociative
from schurmult.families import C3, H2
from schurmult.serialize import ALGEBRA_SCHEMA, algebra_from_json, algebra_to_json, dump_algebra, load_algebra
from strategies import nilpotent_algebras


def test_c3_layout():
    data = algebra_to_json(C3())
    assert data["dim"] == 3 and data["basis"] == ["x", "z", "z'"]
    assert {"i": 0, "j": 0, "k": 1, "c": "1"} in data["products"]
    assert data["nilpotent"] is True


def test_fraction_coefficients():
    a = H2("1/2").algebra
    data = algebra_to_json(a)
    assert any(p["c"] == "1/2" for p in data["products"])
    assert algebra_from_json(data) == a


@settings(max_examples=50, deadline=None)
@given(nilpotent_algebras)
def test_roundtrip(a):
    data = json.loads(json.dumps(algebra_to_json(a)))
    jsonschema.validate(data, ALGEBRA_SCHEMA)
    assert algebra_from_json(data) == a


def test_file_roundtrip(tmp_path):
    path = tmp_path / "c3.json"
    dump_algebra(C3(), path)
    assert load_algebra(path) == C3()


@pytest.mark.parametrize(
    "data",
    [
        {"dim": 2, "basis": ["x"], "products": []},
        {"dim": 1, "basis": ["x"], "products": [{"i": 0, "j": 0, "k": 3, "c": "1"}]},
        {"dim": 1, "basis": ["x"], "products": [{"i": 0, "j": 0, "k": 0, "c": "0.5"}]},
        {"dim": 1, "basis": ["x"]},
    ],
)
def test_rejects_bad_files(data):
    with pytest.raises(AlgebraError):
        algebra_from_json(data)


def test_rejects_non_associative():
    data = {
        "dim": 2,
        "basis": ["x", "z"],
        "products": [{"i": 0, "j": 0, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 0, "c": "1"}],
    }
    with pytest.raises(NotAssociative):
        algebra_from_json(data)
