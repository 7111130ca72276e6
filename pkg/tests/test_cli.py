import json

import pytest

from hypocycloids.braid import Presentation
from hypocycloids.census import SingularityCensus
from hypocycloids.cli import PipelineConfig, case_name, load_manifest, run
from hypocycloids.curve import CurveError, ImplicitCurve, hypocycloid
from hypocycloids.monodromy import MonodromyRecord


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pipeline_deltoid(capsys):
    code, out, _ = call(capsys, "pipeline", "2", "1")
    assert code == 0
    assert "Artin graph: cycle(3)" in out.splitlines()


def test_census_json(capsys):
    code, out, _ = call(capsys, "census", "5", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"degree": 10, "cusps": 8, "nodesReal": 16, "nodesNonreal": 8, "infinity": [5, 2], "alpha": 0}
    SingularityCensus.from_json(data)


def test_domain_error_exit_one(capsys):
    code, _, err = call(capsys, "curve", "4", "2")
    assert code == 1 and "coprime" in err
    code, _, err = call(capsys, "cheb", "identity", "nope", "3", "1")
    assert code == 1


def test_usage_error_exit_two(capsys):
    code, _, err = call(capsys, "census", "5", "3", "--frobnicate")
    assert code == 2 and "usage" in err
    code, _, err = call(capsys, "teleport")
    assert code == 2


def test_curve_json_roundtrip(capsys):
    code, out, _ = call(capsys, "curve", "3", "1", "--variant", "tilde", "--json")
    assert code == 0
    assert ImplicitCurve.from_json(json.loads(out)) == hypocycloid(3, 1, "tilde")


def test_cheb(capsys):
    code, out, _ = call(capsys, "cheb", "identity", "sumU-even", "3", "1")
    assert code == 0 and "holds" in out
    code, out, _ = call(capsys, "cheb", "poly", "T", "3", "--json")
    assert code == 0 and json.loads(out)


def test_monodromy_zvk_group_chain(capsys, tmp_path):
    code, out, _ = call(capsys, "monodromy", "--case", "deltoid", "--json")
    assert code == 0
    rec = MonodromyRecord.from_json(json.loads(out))
    path = tmp_path / "rec.json"
    path.write_text(out)
    code, out, _ = call(capsys, "zvk", str(path), "--names", "a,x,b", "--json")
    assert code == 0
    p = Presentation.from_json(json.loads(out))
    assert p.gens == ("a", "x", "b") and len(p.rels) == len(rec.braids)
    ppath = tmp_path / "p.json"
    ppath.write_text(out)
    code, out, _ = call(capsys, "group", "abel", str(ppath))
    assert code == 0 and out.strip() == "Z x Z"


def test_group_ops(capsys, tmp_path):
    tri = {"gens": ["a", "b", "c"], "rels": [[1, 2, 1, -2, -1, -2], [2, 3, 2, -3, -2, -3], [1, 3, 1, -3, -1, -3]]}
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(tri))
    code, out, _ = call(capsys, "group", "match", str(path))
    assert code == 0 and out.strip() == "cycle(3)"
    code, out, _ = call(capsys, "group", "lowindex", str(path), "-n", "3", "--json")
    assert code == 0 and json.loads(out)[0] == 1
    code, out, _ = call(capsys, "group", "rs", str(path), "--target", "2", "--image", "a=1", "--image", "b=1",
                        "--image", "c=1", "--json")
    assert code == 0 and Presentation.from_json(json.loads(out)).rank == 5
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"gens": ["a", "b"], "rels": [[1, 2, 1, 2, -1, -2, -1, -2]]}))
    code, out, _ = call(capsys, "group", "match", str(bad))
    assert code == 1 and "no match" in out
    code, _, err = call(capsys, "group", "rs", str(path), "--image", "a=1")
    assert code == 1 and "invalid" in err


def test_plot(capsys, tmp_path):
    out = tmp_path / "d.svg"
    assert call(capsys, "plot", "2", "1", "-o", str(out))[0] == 0
    assert out.read_text().startswith("<svg")


def test_fixtures_quick_is_deterministic(capsys):
    a = call(capsys, "fixtures", "verify", "--quick")
    b = call(capsys, "fixtures", "verify", "--quick")
    assert a == b
    lines = a[1].splitlines()
    assert any("pentagon vs B5" in ln and ln.startswith("PASS") for ln in lines)
    # the printed (5,3) equation matches no variant
    assert any(ln.startswith("FAIL") and "hipo85.C golden" in ln for ln in lines)
    assert a[0] == 1


def test_manifest_shape():
    man = load_manifest()
    assert set(man["cases"]) == {"deltoid", "astroid", "hipo53", "hipo85"}
    assert [man["cases"][n]["graph"] for n in ("deltoid", "astroid", "hipo53", "hipo85")] == [
        "cycle(3)", "cycle(4)", "cycle(5)", "cycle(8)"]
    assert case_name(5, 3) == "hipo85"
    with pytest.raises(CurveError):
        case_name(7, 2)


def test_pipeline_config_overrides():
    case = load_manifest()["cases"]["deltoid"]
    cfg = PipelineConfig.from_case(case, method="numeric")
    assert cfg.method == "numeric"
    assert PipelineConfig.from_case(case, method=None).method == case.get("method", "real-picture")
