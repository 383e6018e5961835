"""JSON interchange and the command-line surface."""

import json

import pytest

from dqmat.algebra import MatSubalgebra
from dqmat.cli import main
from dqmat.constructions import (
    block_type_algebra,
    canonical_commutative,
    max_dim_example,
    named_example,
)
from dqmat.blocks import BlockType
from dqmat.errors import ClosureViolation
from dqmat.fields import GF, QQ
from dqmat.linalg import Matrix
from dqmat.serialize import (
    algebra_to_document,
    document_to_algebra,
    document_to_matrix,
    dump_json,
    matrix_to_document,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.mark.parametrize("algebra", [
    canonical_commutative(QQ, (3, 3)),
    canonical_commutative(GF(101), (4, 1)),
    max_dim_example(QQ, 5, 2),
    named_example(GF(7), "m2-dual-numbers"),
])
def test_document_roundtrip(algebra):
    doc = algebra_to_document(algebra)
    back = document_to_algebra(json.loads(dump_json(doc)))
    assert back == algebra
    assert dump_json(algebra_to_document(back)) == dump_json(doc)


def test_document_roundtrip_rational_entries():
    a = MatSubalgebra.from_matrices(
        QQ, 2, [Matrix.identity(QQ, 2), Matrix.from_rows(QQ, [["1/3", 0], [0, "1/3"]])],
        check=True)
    doc = algebra_to_document(a)
    assert document_to_algebra(doc) == a


def test_document_closure_violation():
    doc = {
        "field": {"kind": "rational"},
        "n": 3,
        "basis": [
            [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
            [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
            [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]],
        ],
    }
    with pytest.raises(ClosureViolation):
        document_to_algebra(doc)


def test_matrix_document_roundtrip():
    m = Matrix.from_rows(GF(11), [[1, 4], [0, 10]])
    assert document_to_matrix(matrix_to_document(m)) == m


def test_cli_construct_analyze(tmp_path, capsys):
    out = tmp_path / "a.json"
    code, _ = run_cli(capsys, "construct", "--type", "2,3", "--blocks", "1,1",
                      "--field", "rational", "-o", str(out))
    assert code == 0
    code, report = run_cli(capsys, "analyze", str(out))
    assert code == 0
    assert report["dim"] == 11
    assert report["min_q"] == 2
    assert report["type"] == [2, 3]
    assert report["maximal"] is True
    assert report["block_ids"] == [[2, 1], [3, 1]]
    assert report["field_caveat"] is True


def test_cli_construct_single_block(tmp_path, capsys):
    out = tmp_path / "k.json"
    code, _ = run_cli(capsys, "construct", "--type", "1", "--blocks", "1", "-o", str(out))
    assert code == 0
    code, report = run_cli(capsys, "analyze", str(out))
    assert code == 0
    assert report["min_q"] == 1 and report["dim"] == 1


def test_cli_construct_block_from_document(tmp_path, capsys):
    # --blocks mixes canonical k-indices with paths to algebra documents
    from dqmat.algebra import conjugate_algebra

    scrambled = conjugate_algebra(canonical_commutative(QQ, (2, 1)),
                                  Matrix.from_rows(QQ, [[1, 2], [0, 1]]))
    block_path = tmp_path / "b.json"
    block_path.write_text(dump_json(algebra_to_document(scrambled)))
    out = tmp_path / "mixed.json"
    code, _ = run_cli(capsys, "construct", "--type", "1,2", "--blocks",
                      f"1,{block_path}", "-o", str(out))
    assert code == 0
    a = document_to_algebra(json.loads(out.read_text()))
    assert a.n == 3 and a.dim == 1 + 2 + 2


def test_cli_enumerate_count_classes(capsys):
    code, doc = run_cli(capsys, "enumerate", "--n", "5", "--q", "2", "--count-classes")
    assert code == 0
    assert doc["classes"] == 20
    assert doc["sorted_tuples"] == [[2, 3]]
    code, doc = run_cli(capsys, "enumerate", "--n", "6", "--q", "2", "--ordered")
    assert code == 0
    assert doc["ordered_tuples"] == [[3, 3], [2, 4], [4, 2]]


def test_cli_analyze_m2_dual_numbers(tmp_path, capsys):
    out = tmp_path / "m2.json"
    code, _ = run_cli(capsys, "construct", "--example", "m2-dual-numbers", "-o", str(out))
    assert code == 0
    code, report = run_cli(capsys, "analyze", str(out))
    assert code == 0
    assert report["min_q"] == "not-Dq"
    assert report["type"] == [2, 2]
    permutation = [["1", "0", "0", "0"], ["0", "0", "1", "0"],
                   ["0", "1", "0", "0"], ["0", "0", "0", "1"]]
    assert report["conjugator"] == permutation


def test_cli_verify(tmp_path, capsys):
    out = tmp_path / "a.json"
    run_cli(capsys, "construct", "--type", "1,1", "--blocks", "1,1", "-o", str(out))
    code, doc = run_cli(capsys, "verify", str(out), "--q", "2", "--brute-force")
    assert code == 0
    assert doc["structural"] is True and doc["brute_force"] is True
    code, doc = run_cli(capsys, "verify", str(out), "--q", "1", "--brute-force")
    assert code == 0
    assert doc["structural"] is False and doc["brute_force"] is False


def test_cli_verify_budget(tmp_path, capsys, monkeypatch):
    out = tmp_path / "a.json"
    run_cli(capsys, "construct", "--type", "2,3", "--blocks", "1,1", "-o", str(out))
    code, doc = run_cli(capsys, "verify", str(out), "--q", "2", "--brute-force",
                        "--budget", "10")
    assert code == 1
    assert doc["error"]["code"] == "budget-exceeded"
    monkeypatch.setenv("DQMAT_BRUTE_BUDGET", "10")
    code, doc = run_cli(capsys, "verify", str(out), "--q", "2", "--brute-force")
    assert code == 1
    assert doc["error"]["code"] == "budget-exceeded"


def test_cli_conjugate_roundtrip(tmp_path, capsys):
    a_path = tmp_path / "a.json"
    x_path = tmp_path / "x.json"
    run_cli(capsys, "construct", "--type", "2", "--blocks", "2", "-o", str(a_path))
    x = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    x_path.write_text(dump_json(matrix_to_document(x)))
    code, doc = run_cli(capsys, "conjugate", str(a_path), "--by", str(x_path))
    assert code == 0
    conj = document_to_algebra(doc)
    expected = document_to_algebra(json.loads(a_path.read_text()))
    assert conj != expected
    assert conj.dim == expected.dim


def test_cli_classify(tmp_path, capsys):
    a_path = tmp_path / "a.json"
    b_path = tmp_path / "b.json"
    c_path = tmp_path / "c.json"
    run_cli(capsys, "construct", "--type", "2,3", "--blocks", "1,1", "-o", str(a_path))
    run_cli(capsys, "construct", "--type", "2,3", "--blocks", "1,2", "-o", str(b_path))
    run_cli(capsys, "construct", "--type", "2,3", "--blocks", "1,1", "-o", str(c_path))
    code, doc = run_cli(capsys, "classify", str(a_path), str(b_path))
    assert code == 0
    assert doc["isomorphic"] is False
    code, doc = run_cli(capsys, "classify", str(a_path), str(c_path))
    assert code == 0
    assert doc["isomorphic"] is True
    assert doc["certificate"]["block_ids"] == [[2, 1], [3, 1]]
    assert doc["certificate"]["conjugator"] is not None


def test_cli_classify_domain_error(tmp_path, capsys):
    m2 = tmp_path / "m2.json"
    run_cli(capsys, "construct", "--example", "m2-dual-numbers", "-o", str(m2))
    code, doc = run_cli(capsys, "classify", str(m2), str(m2))
    assert code == 1
    assert doc["error"]["code"] == "not-block-type-max-dim"


def test_cli_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, doc = run_cli(capsys, "analyze", str(bad))
    assert code == 2
    assert doc["error"]["code"] == "parse-error"
    code, doc = run_cli(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2


def test_cli_closure_violation_is_domain_error(tmp_path, capsys):
    doc = {
        "field": {"kind": "rational"},
        "n": 3,
        "basis": [
            [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
            [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
            [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]],
        ],
    }
    bad = tmp_path / "open.json"
    bad.write_text(dump_json(doc))
    code, out = run_cli(capsys, "analyze", str(bad))
    assert code == 1
    assert out["error"]["code"] == "closure-violation"


def test_cli_analyze_small_characteristic(tmp_path, capsys):
    # GF(2) with n = 2: the trace-form radical is unavailable, the rest still works
    a = block_type_algebra(BlockType((1, 1)),
                           [canonical_commutative(GF(2), (1, 1)),
                            canonical_commutative(GF(2), (1, 1))])
    path = tmp_path / "u2gf2.json"
    path.write_text(dump_json(algebra_to_document(a)))
    code, report = run_cli(capsys, "analyze", str(path))
    assert code == 0
    assert report["min_q"] == 2
    assert report["type"] == [1, 1]
    assert report["maximal"] is True
    assert report["invariants"] is None
    assert "radical_unavailable" in report


def test_shipped_document_loads():
    import pathlib

    path = pathlib.Path(__file__).resolve().parents[1] / "data" / "m2_dual_numbers.json"
    doc = json.loads(path.read_text())
    a = document_to_algebra(doc)
    assert a.n == 4 and a.dim == 8
    assert a == named_example(QQ, "m2-dual-numbers")
