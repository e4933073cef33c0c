import io
import json

import pytest

from gttrees.cli import run
from gttrees.core import format_tree, path_tree, star_tree


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def kv(text):
    return dict(line.split(" ", 1) for line in text.splitlines() if line and not line.startswith("#"))


@pytest.fixture
def p4_file(tmp_path):
    p = tmp_path / "p4.tree"
    p.write_text(format_tree(path_tree(4)))
    return str(p)


@pytest.fixture
def p8_file(tmp_path):
    p = tmp_path / "p8.tree"
    p.write_text(format_tree(path_tree(8)))
    return str(p)


def test_analyze_p4(p4_file):
    code, out, _ = call(["analyze", p4_file])
    assert code == 0
    d = kv(out)
    assert (d["tau"], d["gamma_t"], d["gtt_sets"], d["witness"]) == ("2", "2", "1", "1 2")


def test_analyze_sets(p4_file):
    code, out, _ = call(["analyze", "--sets", p4_file])
    assert "vc_set 0 2\nvc_set 1 2\nvc_set 1 3\n" in out
    assert "gtt_set 1 2" in out


def test_analyze_json(p4_file):
    code, out, _ = call(["analyze", "--json", p4_file])
    d = json.loads(out)
    assert d["tau"] == 2 and d["witness"] == [1, 2] and d["gtt_graph"] is True


def test_recognize_p8(p8_file):
    code, out, _ = call(["recognize", p8_file])
    assert code == 0
    d = kv(out)
    assert d["member"] == "false" and d["reason"] == "NoReductionApplies"


def test_gap_family_pipeline(monkeypatch):
    code, tree, _ = call(["gap-family", "tk", "--k", "2"])
    assert code == 0
    code, out, _ = call(["analyze", "--fast", "-"], stdin=tree, monkeypatch=monkeypatch)
    d = kv(out)
    assert (d["tau"], d["gamma_t"]) == ("8", "6")


def test_recognize_then_verify(tmp_path, monkeypatch):
    code, tree, _ = call(["random-member", "--n", "13", "--seed", "5"])
    tf = tmp_path / "m.tree"
    tf.write_text(tree)
    code, out, _ = call(["recognize", str(tf), "--cert-out", str(tmp_path / "m.cert")])
    assert kv(out)["member"] == "true"
    code, vout, _ = call(["verify-cert", str(tf), str(tmp_path / "m.cert")])
    assert code == 0 and kv(vout)["valid"] == "true"
    # full recognize output is also accepted as a certificate
    code, vout, _ = call(["verify-cert", str(tf), "-"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0


def test_verify_cert_rejects(tmp_path, p4_file):
    c = tmp_path / "c"
    c.write_text("base P4\nO2 1\n")
    code, out, _ = call(["verify-cert", p4_file, str(c)])
    assert code == 1 and kv(out)["valid"] == "false"


def test_enumerate_round_trip(monkeypatch):
    code, out, _ = call(["enumerate", "--n", "7", "--emit"])
    assert code == 0
    code, rep, _ = call(["analyze", "-"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert rep.count("tau ") == 11


def test_enumerate_count():
    assert call(["enumerate", "--n", "9"])[1] == "order 9 count 47\n"


def test_grow(p4_file):
    code, out, _ = call(["grow", "--op", "o3", "--at", "1", p4_file])
    assert code == 0 and "n 6" in out and "e 1 4" in out
    code, _, err = call(["grow", "--op", "o3", "--at", "0", p4_file])
    assert code == 1 and "no (gamma_t-tau)-set" in err
    code, out, _ = call(["grow", "--op", "o3", "--at", "0", "--unchecked", p4_file])
    assert code == 0


def test_corona(tmp_path):
    f = tmp_path / "k13"
    f.write_text(format_tree(star_tree(4)))
    code, out, _ = call(["corona", str(f)])
    assert "n 8" in out and "e 3 7" in out


def test_verify_verb():
    code, out, _ = call(["verify", "--max", "7", "--claims", "all"])
    assert code == 0
    assert "passed true" in out
    assert "claim recognizer_matches_oracle checked 22 discrepancies 0" in out


def test_verify_json():
    code, out, _ = call(["verify", "--max", "5", "--claims", "main", "--json"])
    assert json.loads(out)["passed"] is True


def test_random_s_member():
    code, out, _ = call(["random-s-member", "--n", "10", "--seed", "1"])
    assert code == 0 and out.startswith("# tau")


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["analyze"],
    ["enumerate", "--n", "25"],
    ["verify", "--max", "4", "--claims", "nope"],
    ["gap-family", "tk", "--k", "0"],
    ["grow", "--op", "o9", "--at", "0", "x"],
])
def test_usage_errors(argv):
    assert call(argv)[0] == 2


def test_domain_errors(tmp_path):
    bad = tmp_path / "bad"
    bad.write_text("n 3\ne 0 1\ne 1 2\ne 0 2\n")
    code, _, err = call(["analyze", str(bad)])
    assert code == 1 and "not a tree" in err
    code, _, err = call(["analyze", str(tmp_path / "missing")])
    assert code == 1
