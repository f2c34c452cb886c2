import json

import pytest
from hypothesis import given

from conftest import sphere_maps
from sdmaps import incidence, io, wheel
from sdmaps.errors import ParseError, ValidationError


@given(sphere_maps())
def test_round_trip_is_byte_exact(m):
    text = io.serialize_map(m, metadata={"name": "m"})
    back = io.parse_map(text)
    assert back.alpha == m.alpha and back.sigma == m.sigma
    assert io.serialize_map(back, metadata={"name": "m"}) == text


def test_document_layout():
    text = io.serialize_map(wheel(3))
    lines = text.splitlines()
    assert lines[0] == "{" and lines[-1] == "}"
    keys = [json.loads("{" + ln.rstrip(",") + "}").popitem()[0] for ln in lines[1:-1]]
    assert keys == ["format_version", "darts", "alpha", "sigma", "metadata"]
    assert json.loads(text)["metadata"] == {"name": "W3"}


def test_vertex_labels_round_trip():
    m = wheel(3)
    text = io.serialize_map(m, vertex_labels=["a", "b", "c", "d"])
    doc = io.parse_document(text)
    assert doc.vertex_labels == ("a", "b", "c", "d")
    assert io.serialize_document(doc) == text


def test_file_round_trip(tmp_path):
    p = tmp_path / "w.json"
    io.write_map(wheel(4), p)
    assert io.read_map(p) == wheel(4)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        io.parse_map('{\n  "darts": 2,\n  oops\n}')
    assert exc.value.line == 3


def _doc(**kw):
    base = {"format_version": "1.0", "darts": 2, "alpha": [1, 0], "sigma": [0, 1]}
    base.update(kw)
    return json.dumps({k: v for k, v in base.items() if v is not None})


@pytest.mark.parametrize("text, needle", [
    ("[1, 2]", "JSON object"),
    (_doc(sigma=None), "missing keys: sigma"),
    (_doc(extra=1), "unknown keys: extra"),
    (_doc(format_version="2.0"), "unsupported"),
    (_doc(format_version=1), "must be a string"),
    (_doc(darts=3), "even"),
    (_doc(darts=-2), "non-negative"),
    (_doc(alpha=[1]), "expected 2"),
    (_doc(alpha=[1, "0"]), "array of integers"),
    (_doc(alpha=[0, 1]), "NotInvolution"),
    (_doc(vertex_labels=[1]), "vertex_labels"),
    (_doc(vertex_labels=["a"]), "vertex_labels has 1"),
    (_doc(metadata=[]), "metadata"),
    (json.dumps({"format_version": "1.0", "darts": 4, "alpha": [1, 0, 3, 2], "sigma": [2, 3, 1, 0]}), "NotSphere"),
])
def test_validation_errors(text, needle):
    with pytest.raises(ValidationError, match=needle):
        io.parse_map(text)


def test_nonspherical_allowed_on_request():
    text = json.dumps({"format_version": "1.0", "darts": 4, "alpha": [1, 0, 3, 2], "sigma": [2, 3, 1, 0]})
    assert io.parse_map(text, allow_nonspherical=True).euler_characteristic == 0


def test_dot_export():
    m = wheel(3)
    dot = io.to_dot(m, name="W3")
    assert dot.startswith('graph "W3" {')
    assert dot.count(" -- ") == 6
    inc = io.to_dot(incidence(m))
    assert inc.count("fillcolor=black") == 4 and inc.count("fillcolor=white") == 4
    assert inc.count(" -- ") == 12
