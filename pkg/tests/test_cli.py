import json

import pytest

from qpcat.cli import main
from qpcat.jsonio import qp_to_json, quiver_to_json
from qpcat.constructions import five_vertex_qp, q2222_qp, tubular_algebra
from qpcat.jsonio import presentation_to_json
from qpcat.scalars import rf


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv + ["--json"])
    return code, json.loads(out)


def test_build_five_vertex(capsys):
    code, data = run_json(capsys, ["build", "five-vertex"])
    assert code == 0
    assert len(data["quiver"]["arrows"]) == 8
    assert len(data["potential"]["cycles"]) == 4


def test_build_q2222_with_lambda(capsys):
    code, data = run_json(capsys, ["build", "q2222", "--lambda", "2"])
    assert code == 0
    assert len(data["quiver"]["arrows"]) == 12
    coefs = {c["coef"] for c in data["potential"]["cycles"]}
    assert "2" in coefs


def test_build_genus(capsys):
    code, data = run_json(capsys, ["build", "genus", "--weights", "2,3,6"])
    assert code == 0 and data["kind"] == "tubular"


def test_mutate_sequence_via_file(tmp_path, capsys):
    path = tmp_path / "q.json"
    path.write_text(json.dumps(quiver_to_json(five_vertex_qp().quiver)))
    code, data = run_json(capsys, ["mutate", "--quiver", str(path),
                                   "--seq", "5,4,3,2"])
    assert code == 0 and data["acyclic"]


def test_qpmutate_and_jacobian(tmp_path, capsys):
    path = tmp_path / "qp.json"
    path.write_text(json.dumps(qp_to_json(q2222_qp(rf(2)))))
    code, data = run_json(capsys, ["qpmutate", "--qp", str(path), "--at", "1"])
    assert code == 0 and data["two_acyclic"]

    code, data = run_json(capsys, ["jacobian", "--qp", str(path)])
    assert code == 0
    assert data["total"] == 36 and data["stabilized_at"] == 4


def test_nondegen_and_rigid(tmp_path, capsys):
    path = tmp_path / "qp.json"
    path.write_text(json.dumps(qp_to_json(q2222_qp(rf(2)))))
    code, data = run_json(capsys, ["nondegen", "--qp", str(path), "--depth", "1"])
    assert code == 0 and data["passed"]

    three = tmp_path / "three.json"
    three.write_text(json.dumps({
        "quiver": {"vertices": ["1", "2", "3"],
                   "arrows": [{"id": "x", "src": "1", "tgt": "2"},
                              {"id": "y", "src": "2", "tgt": "3"},
                              {"id": "z", "src": "3", "tgt": "1"}]},
        "potential": {"cycles": [{"coef": "1", "word": ["z", "y", "x"]}]}}))
    code, data = run_json(capsys, ["rigid", "--qp", str(three), "--degree", "6"])
    assert code == 0 and data["ok"]


def test_coxeter_check_and_qw(tmp_path, capsys):
    path = tmp_path / "star.json"
    path.write_text(json.dumps(quiver_to_json(
        five_vertex_qp().quiver)))  # not acyclic: expect a clean error
    a3 = tmp_path / "a3.json"
    a3.write_text(json.dumps({"vertices": ["1", "2", "3"],
                              "arrows": [{"id": "a", "src": "1", "tgt": "2"},
                                         {"id": "b", "src": "2", "tgt": "3"}]}))
    code, data = run_json(capsys, ["coxeter", "check", "--quiver", str(a3),
                                   "--word", "1,2,1"])
    assert code == 0 and data["reduced"]
    code, data = run_json(capsys, ["coxeter", "check", "--quiver", str(a3),
                                   "--word", "1,1"])
    assert code == 1 and data["failing_prefix"] == 2

    code, data = run_json(capsys, ["qw", "--weights", "2,3,4"])
    assert code == 0
    assert len(data["quiver"]["vertices"]) == 8


def test_keller_from_presentation_file(tmp_path, capsys):
    path = tmp_path / "pres.json"
    path.write_text(json.dumps(presentation_to_json(tubular_algebra(rf(2)))))
    code, data = run_json(capsys, ["keller", "--presentation", str(path)])
    assert code == 0
    assert len(data["quiver"]["arrows"]) == 12


def test_verify_paper_filter(capsys):
    code, out = run(capsys, ["verify-paper", "--only", "five-vertex"])
    assert code == 0
    assert "PASS" in out and "five-vertex" in out
