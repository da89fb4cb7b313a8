import pytest

from gkcodes import reports
from gkcodes.errors import GKError


def test_dec():
    assert reports.dec(22014720) == "22014720"
    assert reports.dec(2**80) == str(2**80)


def test_elem_constant_first(f64):
    # 2 encodes the generator x: digits (0, 1, 0, 0, 0, 0)
    assert reports.elem(f64, 2) == [0, 1, 0, 0, 0, 0]
    assert reports.elem(f64, 1) == [1, 0, 0, 0, 0, 0]
    assert reports.elem_vec(f64, [0, 1]) == [[0] * 6, [1] + [0] * 5]


def test_json_deterministic():
    body = {"b": 2, "a": {"z": [3, 1], "y": "s"}}
    r1 = reports.build_report("k", {"ell": 2}, body)
    r2 = reports.build_report("k", {"ell": 2}, dict(reversed(body.items())))
    assert reports.to_json(r1) == reports.to_json(r2)
    assert reports.to_json(r1).endswith("\n")


def test_floats_rejected():
    with pytest.raises(GKError) as e:
        reports.build_report("k", {}, {"x": 1.5})
    assert e.value.code == "CONFIG_INVALID"


def test_csv_roundtrip_shape():
    rep = reports.build_report("k", {"ell": 3}, {"hist": {"2": 5}, "v": [1, 2]})
    text = reports.to_csv(rep)
    lines = text.strip().split("\n")
    assert lines[0] == "key,value"
    keys = [ln.split(",")[0] for ln in lines[1:]]
    assert "body.hist.2" in keys
    assert "body.v" in keys


def test_unknown_format():
    rep = reports.build_report("k", {}, {})
    with pytest.raises(GKError):
        reports.render(rep, "yaml")


def test_write_report(tmp_path):
    rep = reports.build_report("k", {"ell": 2}, {"n": 225})
    path = tmp_path / "r.json"
    text = reports.write_report(rep, str(path), "json")
    assert path.read_text() == text
