import json
import math

import pytest

from groupgrowth import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    assert err == ""
    return code, json.loads(out)


@pytest.fixture()
def free2_spec(tmp_path):
    path = tmp_path / "free2.json"
    path.write_text(json.dumps({"family": "free", "params": {"n": 2}}))
    return str(path)


@pytest.fixture()
def tb_spec(tmp_path):
    path = tmp_path / "tb.json"
    path.write_text(json.dumps({"family": "torus_bundle", "params": {"matrix": [[2, 1], [1, 1]]}}))
    return str(path)


# --- growth -----------------------------------------------------------------


def test_growth_report_and_csv(free2_spec, tmp_path, capsys):
    out_csv = tmp_path / "table.csv"
    code, report = run_json(
        ["growth", "--spec", free2_spec, "--kmax", "6", "--out", str(out_csv)], capsys
    )
    assert code == 0
    assert report["gamma"] == [2 * 3 ** k - 1 for k in range(7)]
    assert report["complete"] is True
    assert report["rates"]["verdict"] == "exponential"
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "k,gamma,sigma,root_bound,ratio"
    assert lines[-1].startswith("6,1457,972,")


def test_growth_with_window(free2_spec, capsys):
    code, report = run_json(
        ["growth", "--spec", free2_spec, "--kmax", "6", "--window", "2,6"], capsys
    )
    assert code == 0
    assert report["rates"]["window"] == [2, 6]


def test_growth_budget_flag(free2_spec, capsys):
    code, report = run_json(
        ["growth", "--spec", free2_spec, "--kmax", "8", "--max-elements", "30"], capsys
    )
    assert code == 0
    assert report["complete"] is False
    assert report["gamma"] == [1, 5, 17]


# --- bound -----------------------------------------------------------------


def test_bound_osin(capsys):
    code, report = run_json(["bound", "--theorem", "osin", "--matrix", "2,1,1,1"], capsys)
    assert code == 0
    assert report["theorem"] == "osin_polycyclic"
    assert report["value"] == pytest.approx(1.4962221128, abs=1e-9)
    assert "sqrt(5)" in report["exact_form"]


def test_bound_surface_variants(capsys):
    code, report = run_json(["bound", "--theorem", "surface", "--genus", "2"], capsys)
    assert report["value"] == 5.0
    code, weak = run_json(
        ["bound", "--theorem", "surface", "--genus", "2", "--weak"], capsys
    )
    assert weak["value"] == 3.0


def test_bound_free_product_from_spec(tmp_path, capsys):
    spec = tmp_path / "fp.json"
    spec.write_text(
        json.dumps(
            {
                "family": "free_product",
                "params": {
                    "factors": [
                        {"family": "cyclic", "params": {"m": 2}},
                        {"family": "cyclic", "params": {"m": 2}},
                    ]
                },
            }
        )
    )
    code, report = run_json(["bound", "--theorem", "free_product", "--spec", str(spec)], capsys)
    # infinite dihedral: gates fail but the report still comes back cleanly
    assert code == 0
    assert report["hypotheses_ok"] is False
    assert report["value"] is None


def test_bound_amalgam_and_hnn(capsys):
    code, report = run_json(["bound", "--theorem", "amalgam", "--indices", "3,2"], capsys)
    assert report["value"] == pytest.approx(2 ** 0.25)
    code, report = run_json(["bound", "--theorem", "hnn", "--indices", "inf,1"], capsys)
    assert report["hypotheses_ok"] is True
    code, report = run_json(["bound", "--theorem", "amalgam", "--indices", "inf,1"], capsys)
    assert report["hypotheses_ok"] is False


def test_bound_bcg_and_solvable(tmp_path, capsys):
    table = tmp_path / "bcg.json"
    table.write_text(json.dumps([[3, 1, 0.05]]))
    code, report = run_json(
        ["bound", "--theorem", "bcg", "--bcg", str(table), "--dim", "3", "--pinching", "1"],
        capsys,
    )
    assert report["value"] == pytest.approx(math.exp(0.05))
    code, report = run_json(["bound", "--theorem", "solvable"], capsys)
    assert report["value"] == pytest.approx(2 ** (1 / 6))


# --- verify -----------------------------------------------------------------


def test_verify_passes_torus_bundle(tb_spec, capsys):
    code, report = run_json(["verify", "--spec", tb_spec, "--kmax", "8"], capsys)
    assert code == 0
    assert report["pass"] is True
    assert report["applicable"] is True
    assert report["bound"]["theorem"] == "osin_polycyclic"


def test_verify_vacuous_when_no_bound_applies(free2_spec, capsys):
    code, report = run_json(["verify", "--spec", free2_spec, "--kmax", "5"], capsys)
    assert code == 0
    assert report["applicable"] is False
    assert report["pass"] is True


def test_verify_failure_exits_one(tb_spec, capsys, monkeypatch):
    from groupgrowth.bounds import BoundReport

    # force an absurd bound to exercise the failure path
    monkeypatch.setattr(
        cli,
        "_applicable_bound",
        lambda spec: BoundReport("osin_polycyclic", True, (), 100.0, "100"),
    )
    code, report = run_json(["verify", "--spec", tb_spec, "--kmax", "4"], capsys)
    assert code == 1
    assert report["pass"] is False


# --- scan, search, classify, universal -----------------------------------------


def test_scan_cli(tmp_path, capsys):
    out_csv = tmp_path / "scan.csv"
    code, report = run_json(["scan", "--entry-bound", "2", "--out", str(out_csv)], capsys)
    assert code == 0
    classes = {c["det"]: c for c in report["classes"]}
    assert classes[1]["min_lambda_exact"] == "(3+sqrt(5))/2"
    assert classes[-1]["min_lambda_exact"] == "(1+sqrt(5))/2"
    assert classes[-1]["lambda_le_2"] is True
    assert classes[-1]["note"]
    lines = out_csv.read_text().splitlines()
    assert lines[0].startswith("det,trace,")
    assert len(lines) == report["hyperbolic_count"] + 1


def test_search_cli(tmp_path, capsys):
    spec = tmp_path / "z.json"
    spec.write_text(json.dumps({"family": "free_abelian", "params": {"n": 1}}))
    code, report = run_json(
        ["search", "--spec", str(spec), "--radius", "2", "--set-size", "1", "--k", "10"],
        capsys,
    )
    assert code == 0
    assert report["candidates_tested"] == 2
    assert report["best"]["u_k"] == pytest.approx(21 ** 0.1)


def test_classify_cli(tmp_path, capsys):
    manifold = tmp_path / "m.json"
    manifold.write_text(
        json.dumps(
            {
                "kind": "connected_sum",
                "params": {
                    "summands": [
                        {"kind": "spherical", "params": {"m": 5}},
                        {"kind": "three_torus", "params": {}},
                    ],
                    "s2xs1_count": 1,
                },
            }
        )
    )
    code, report = run_json(["classify", "--spec", str(manifold)], capsys)
    assert code == 0
    assert report["growth"]["verdict"] == "exponential"
    assert report["growth"]["theorem_tag"] == "bucher_free_product"
    assert report["group"]["family"] == "free_product"


def test_classify_tag_only_kind(tmp_path, capsys):
    manifold = tmp_path / "m.json"
    manifold.write_text(json.dumps({"kind": "twisted_I_bundle_klein_double", "params": {}}))
    code, report = run_json(["classify", "--spec", str(manifold)], capsys)
    assert code == 0
    assert report["group"] is None
    assert report["growth"]["verdict"] == "polynomial"


def test_universal_cli(tmp_path, capsys):
    code, report = run_json(["universal"], capsys)
    assert code == 0
    assert report["value"] == pytest.approx(2 ** (1 / 6))
    table = tmp_path / "bcg.json"
    table.write_text(json.dumps([[3, 1, 0.05], [2, 1, 0.05]]))
    code, report = run_json(["universal", "--bcg", str(table)], capsys)
    assert report["value"] == pytest.approx(math.exp(0.05))
    code, report = run_json(["universal", "--bcg", str(table), "--no-bcg"], capsys)
    assert report["value"] == pytest.approx(2 ** (1 / 6))


def test_out_flag_duplicates_report(tmp_path, capsys):
    out = tmp_path / "u.json"
    code, report = run_json(["universal", "--out", str(out)], capsys)
    assert code == 0
    assert json.loads(out.read_text()) == report


# --- error handling --------------------------------------------------------------


def test_missing_file_exits_two(capsys):
    code, out, err = run(["growth", "--spec", "no-such-file.json", "--kmax", "3"], capsys)
    assert code == 2
    assert "error:" in err


def test_malformed_json_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(["growth", "--spec", str(bad), "--kmax", "3"], capsys)
    assert code == 2


def test_invalid_spec_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"family": "surface", "params": {"genus": 1}}))
    code, out, err = run(["growth", "--spec", str(bad), "--kmax", "3"], capsys)
    assert code == 2
    assert "genus" in err


def test_bad_matrix_string_exits_two(capsys):
    code, out, err = run(["bound", "--theorem", "osin", "--matrix", "2,1,1"], capsys)
    assert code == 2
    code, out, err = run(["bound", "--theorem", "osin"], capsys)
    assert code == 2


def test_unknown_theorem_exits_two(capsys):
    code, out, err = run(["bound", "--theorem", "fermat"], capsys)
    assert code == 2


def test_bad_window_exits_two(free2_spec, capsys):
    code, out, err = run(
        ["growth", "--spec", free2_spec, "--kmax", "6", "--window", "nope"], capsys
    )
    assert code == 2


# --- determinism ------------------------------------------------------------------


def test_growth_stdout_is_deterministic(free2_spec, capsys):
    _, out1, _ = run(["growth", "--spec", free2_spec, "--kmax", "6"], capsys)
    _, out2, _ = run(["growth", "--spec", free2_spec, "--kmax", "6"], capsys)
    assert out1 == out2


def test_scan_stdout_is_deterministic(capsys):
    _, out1, _ = run(["scan", "--entry-bound", "2"], capsys)
    _, out2, _ = run(["scan", "--entry-bound", "2"], capsys)
    assert out1 == out2
