import json
import subprocess
import sys

import pytest

from conftest import M2, P, S1, T
from implalg import compute_profile, from_hypergraph, rho_of_hypergraph
from implalg.cli import main
from implalg.formats import hypergraph_to_json, profile_to_json, rho_to_json
from test_profile import star


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_profile(capsys, write):
    code, out, _ = run(capsys, "profile", write("t.json", hypergraph_to_json(T)))
    assert code == 0
    assert json.loads(out) == {"m": 3, "values": {"1": 2, "2": 2, "3": 1, "4": 2, "5": 1, "6": 1, "7": 0}}
    code, out, _ = run(capsys, "profile", write("s.json", hypergraph_to_json(S1)))
    assert json.loads(out) == {"m": 1, "values": {"1": 2}}


def test_profile_reduction_notice(capsys, write):
    f = write("h.json", {"vertices": ["a", "b"], "edges": [["a"], ["a", "b"]]})
    code, out, err = run(capsys, "profile", f)
    assert code == 0
    assert "input not Sperner; reduced 2 -> 1 edges" in err
    assert json.loads(out) == {"m": 1, "values": {"1": 2}}


def test_malformed_input(capsys, write):
    code, out, err = run(capsys, "profile", write("bad.json", "{nope"))
    assert code == 2 and out == "" and "input error" in err


def test_rho(capsys, write):
    code, out, _ = run(capsys, "rho", write("m2.json", hypergraph_to_json(M2)))
    assert code == 0 and json.loads(out)["values"]["3"] == 4
    code, out, _ = run(capsys, "rho", write("t.json", hypergraph_to_json(T)))
    assert all(json.loads(out)["values"][k] == 3 for k in ("3", "5", "6"))
    code, out, _ = run(capsys, "rho", write("e.json", {"vertices": [], "edges": []}))
    assert code == 2 and out == ""


def test_iso(capsys, write):
    t = write("t.json", hypergraph_to_json(T))
    t2 = write("t2.json", {"vertices": ["x", "y", "z"], "edges": [["y", "z"], ["x", "z"], ["x", "y"]]})
    code, out, _ = run(capsys, "iso", t, t2)
    doc = json.loads(out)
    assert code == 0 and doc["isomorphic"] is True
    assert sorted(j for _, j in doc["mapping"]) == [0, 1, 2]
    code, out, _ = run(capsys, "iso", write("p.json", hypergraph_to_json(P)), write("m2.json", hypergraph_to_json(M2)))
    assert code == 1 and json.loads(out) == {"isomorphic": False}
    code, out, _ = run(capsys, "iso", t, t + ".missing")
    assert code == 2 and out == ""


def test_check_profile(capsys, write):
    pt = profile_to_json(compute_profile(from_hypergraph(T)))
    code, out, _ = run(capsys, "check-profile", write("pt.json", pt))
    assert code == 0 and json.loads(out) == {"verdict": "pass"}
    code, out, _ = run(capsys, "check-profile", write("star.json", profile_to_json(star(4, 2))))
    doc = json.loads(out)
    assert code == 1
    assert doc == {"verdict": "fail", "clause": "q_A submodular", "kind": "submodular",
                   "A": [1], "pair": [[0, 2], [0, 3]]}
    code, out, _ = run(capsys, "check-profile", write("one.json", {"m": 1, "values": {"1": 5}}))
    assert code == 0


def test_realize(capsys, write):
    code, out, err = run(capsys, "realize", write("path.json", {"m": 2, "values": {"1": 2, "2": 2, "3": 1}}))
    doc = json.loads(out)
    assert code == 0 and err == ""
    assert doc["vertices"] == ["v0", "v1", "v2"]
    assert doc["edges"] == [["v0", "v1"], ["v0", "v2"]]
    assert doc["degeneracy"] == []


def test_realize_degenerate(capsys, write):
    code, out, err = run(capsys, "realize", write("one.json", {"m": 2, "values": {"1": 1, "2": 1, "3": 1}}))
    doc = json.loads(out)
    assert code == 0
    assert doc["degeneracy"] == [{"kind": "coinciding", "indices": [0, 1]}]
    assert doc["indexed_edges"] == [["v0"], ["v0"]]
    assert "degenerate: 1 distinct maximal edges of 2 indices" in err


def test_realize_failures(capsys, write):
    code, out, err = run(capsys, "realize", write("bad.json", {"m": 2, "values": {"1": 1, "2": 2, "3": 2}}))
    assert code == 3 and out == "" and "conditions fail" in err
    code, out, err = run(capsys, "realize", write("star5.json", profile_to_json(star(5, 3))))
    assert code == 4 and out == ""


def test_recognize(capsys, write):
    code, out, _ = run(capsys, "recognize", write("rt.json", rho_to_json(rho_of_hypergraph(T))))
    doc = json.loads(out)
    assert code == 0 and doc["recognized"] is True and doc["distinct_edges"] is True
    assert len(doc["edges"]) == 3
    code, out, _ = run(capsys, "recognize", write("mono.json", {"m": 2, "values": {"0": 0, "1": 2, "2": 1, "3": 1}}))
    doc = json.loads(out)
    assert code == 1
    assert doc == {"recognized": False, "stage": 1, "reason": "not a polymatroid: monotone",
                   "witness": {"kind": "monotone", "pair": [[0], [0, 1]]}}


def test_recognize_duplicate_edges(capsys, write):
    code, out, err = run(capsys, "recognize", write("dup.json", {"m": 2, "values": {"0": 0, "1": 1, "2": 1, "3": 1}}))
    doc = json.loads(out)
    assert code == 0 and doc["distinct_edges"] is False
    assert "degenerate" in err


def test_verify_corpus(capsys):
    code, out, _ = run(capsys, "verify-corpus", "1", "1")
    assert code == 0 and json.loads(out)["all_passed"] is True
    code, out, err = run(capsys, "verify-corpus", "3", "2")
    doc = json.loads(out)
    assert code == 0 and doc["all_passed"]
    assert all(c["failed"] == 0 for c in doc["checks"].values())
    assert "realize:" in err
    code, out, _ = run(capsys, "verify-corpus", "7", "5")
    assert code == 2 and out == ""


def test_output_is_byte_stable(capsys, write):
    f = write("t.json", hypergraph_to_json(T))
    first = run(capsys, "profile", f)[1]
    assert run(capsys, "profile", f)[1] == first
    pretty = run(capsys, "--pretty", "profile", f)[1]
    assert json.loads(pretty) == json.loads(first) and "\n  " in pretty
    assert run(capsys, "profile", "--pretty", f)[1] == pretty


def test_dot(capsys, write):
    code, out, _ = run(capsys, "realize", "--dot", write("path.json", {"m": 2, "values": {"1": 2, "2": 2, "3": 1}}))
    assert code == 0 and out.startswith("graph H {")
    code, out, err = run(capsys, "profile", "--dot", write("t.json", hypergraph_to_json(T)))
    assert json.loads(out)["m"] == 3 and "--dot ignored" in err


def test_stdin_and_module_entry(write):
    doc = json.dumps(hypergraph_to_json(S1))
    proc = subprocess.run(
        [sys.executable, "-m", "implalg.cli", "profile", "-"],
        input=doc, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"m":1,"values":{"1":2}}\n'
