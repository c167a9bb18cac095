import json
import os

from qtorus.cli import main

CASES = os.path.join(os.path.dirname(__file__), "..", "cases")


def case(name):
    return os.path.join(CASES, name)


def test_validate_shipped_cases(capsys):
    for name in (
        "l3_standard.json",
        "case1_rational.json",
        "case2_sqrt5.json",
        "case3_sqrt5.json",
        "case4_zeta3.json",
        "case4_qminus1.json",
        "n3_decompose.json",
    ):
        assert main(["validate", case(name), "--degree-bound", "2", "--samples", "10"]) == 0
        out = capsys.readouterr().out
        assert "result: PASS" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": {"kind": "quadratic", "D": 4}}')
    assert main(["validate", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "$.field" in err


def test_missing_file_exit_code(capsys):
    assert main(["validate", "/nonexistent/problem.json"]) == 2


def test_float_rationals_rejected(tmp_path, capsys):
    doc = {
        "field": {"kind": "quadratic", "D": 5},
        "q": {"entries": [[["1"], ["0.5"]], [["2"], ["1"]]]},
        "action": {"kind": "order2", "blocks": [{"sign": 1}, {"sign": 1}]},
    }
    bad = tmp_path / "float.json"
    bad.write_text(json.dumps(doc))
    assert main(["validate", str(bad)]) == 2
    assert "$.q.entries[0][1]" in capsys.readouterr().err


def test_bad_commutation_matrix_is_failed_check(tmp_path, capsys):
    # q12 * q21 != 1: well-formed document, failed identity, exit 1
    doc = {
        "field": {"kind": "quadratic", "D": 5},
        "q": {"entries": [[["1"], ["2"]], [["2"], ["1"]]]},
        "action": {"kind": "trivial"},
    }
    bad = tmp_path / "badq.json"
    bad.write_text(json.dumps(doc))
    assert main(["validate", str(bad)]) == 1


def test_incompatible_action_fails_with_witness(tmp_path, capsys):
    doc = {
        "field": {"kind": "quadratic", "D": 5},
        "q": {"entries": [[["1"], ["2"]], [["1/2"], ["1"]]]},
        "action": {"kind": "order2", "blocks": [{"swap": [0, 1]}]},
    }
    bad = tmp_path / "incompat.json"
    bad.write_text(json.dumps(doc))
    assert main(["validate", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "witness" in out


def test_center_report_content(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert main(["center", case("l3_standard.json"), "--json", str(out_path)]) == 0
    doc = json.loads(out_path.read_text())
    assert doc["ok"] is True
    assert doc["inputs"]["lattice"] == [[3, 0], [0, 3]]
    gens = doc["inputs"]["generators"]
    assert len(gens) == 1 and all(gens[0]["central"])
    exps = {tuple(term["exp"]) for elt in gens[0]["basis"] for term in elt}
    assert exps == {(3, 0), (0, 3)}


def test_json_reports_byte_identical(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["center", case("l3_standard.json"), "--json", str(p1)]) == 0
    assert main(["center", case("l3_standard.json"), "--json", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_validate_seed_does_not_change_outcome(tmp_path):
    p1, p2 = tmp_path / "s0.json", tmp_path / "s7.json"
    base = ["validate", case("case4_zeta3.json"), "--degree-bound", "2", "--samples", "10"]
    assert main(base + ["--json", str(p1), "--seed", "0"]) == 0
    assert main(base + ["--json", str(p2), "--seed", "7"]) == 0
    d1, d2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    pattern1 = [(c["name"], c["status"]) for c in d1["checks"]]
    pattern2 = [(c["name"], c["status"]) for c in d2["checks"]]
    assert pattern1 == pattern2


def test_specialize_with_chi_and_rational_form(tmp_path, capsys):
    out_path = tmp_path / "spec.json"
    code = main(
        [
            "specialize",
            case("l3_standard.json"),
            "--chi",
            case("chi_symmetric.json"),
            "--form",
            "k",
            "--json",
            str(out_path),
        ]
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["inputs"]["dimension"] == 9
    assert doc["inputs"]["rational_dimension"] == 9
    assert doc["inputs"]["rational_center_dim"] == 1
    assert doc["inputs"]["rational_radical_dim"] == 0


def test_decompose_report(tmp_path):
    out_path = tmp_path / "dec.json"
    assert main(["decompose", case("n3_decompose.json"), "--json", str(out_path)]) == 0
    doc = json.loads(out_path.read_text())
    assert doc["inputs"]["ks"] == [1]
    assert doc["inputs"]["zeros"] == 1
    assert doc["inputs"]["blocks"][0]["degree"] == 3


def test_decompose_without_character(tmp_path, capsys):
    assert main(["decompose", case("case4_zeta3.json")]) == 2


def test_normal_form_output(tmp_path):
    out_path = tmp_path / "nf.json"
    assert main(["normal-form", case("matrix_example.json"), "--json", str(out_path)]) == 0
    doc = json.loads(out_path.read_text())
    assert doc["inputs"]["alternating"]["ks"] == [2]
    assert doc["inputs"]["alternating"]["zeros"] == 1
    D = doc["inputs"]["smith"]["D"]
    assert [D[i][i] for i in range(3)] == [2, 2, 0]


def test_catalog_cli():
    assert main(["catalog", "--case", "2", "--D", "5", "--q", "9,4"]) == 0
    assert main(["catalog", "--case", "2", "--D", "5", "--q", "2"]) == 1


def test_witness_cli():
    assert main(["witness", "--case", "2", "--l", "3", "--q", "0,1"]) == 0
    assert main(["witness", "--case", "4", "--l", "3", "--q", "0,1"]) == 0
    assert main(["witness", "--case", "4", "--D", "-3", "--q=-1/2,1/2"]) == 0
    # not a root of unity: precondition failure, exit 1
    assert main(["witness", "--case", "2", "--D", "5", "--q", "9,4"]) == 1


def test_invariants_cli(tmp_path):
    out_path = tmp_path / "inv.json"
    assert (
        main(
            [
                "invariants",
                case("case2_sqrt5.json"),
                "--degree-bound",
                "2",
                "--json",
                str(out_path),
            ]
        )
        == 0
    )
    doc = json.loads(out_path.read_text())
    assert any(c["name"] == "completeness" and c["status"] == "pass" for c in doc["checks"])
