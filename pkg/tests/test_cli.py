import json

import pytest

from petersen_alpha.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alpha_text(capsys):
    code, out, _ = run(capsys, "alpha", "--n", "13", "--k", "6")
    assert code == 0
    assert "alpha(P(13,6)) = 10" in out


def test_alpha_json_with_witness(capsys):
    code, out, _ = run(capsys, "alpha", "--n", "11", "--k", "4", "--witness", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == 9
    assert len(payload["witness"]) == 9
    assert payload["method"] in ("window-dp", "branch-reduce")


def test_alpha_forced_method(capsys):
    code, out, _ = run(capsys, "alpha", "--n", "10", "--k", "2", "--method", "closed", "--json")
    assert code == 0
    assert json.loads(out)["method"] == "closed-form"


def test_alpha_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "alpha", "--n", "4", "--k", "2")
    assert code == 1 and "n > 2k" in err


def test_alpha_forced_method_precondition_exit_1(capsys):
    code, _, err = run(capsys, "alpha", "--n", "13", "--k", "6", "--method", "closed")
    assert code == 1 and "closed form" in err


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "16", "--k", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == 14
    assert payload["lower"]["value"] == 14 and payload["upper"]["value"] == 14
    assert {b["kind"] for b in payload["all"]} >= {"lower", "upper"}


def test_table_csv_stdout(capsys):
    code, out, _ = run(capsys, "table", "--n-max", "6")
    assert code == 0
    assert out.splitlines() == ["n,k,alpha,method", "5,1,4,closed-form", "5,2,4,closed-form",
                                "6,1,6,closed-form", "6,2,4,closed-form"]


def test_table_writes_file_and_cache(tmp_path, capsys):
    out_path = tmp_path / "t.csv"
    cache_path = tmp_path / "c.jsonl"
    code, _, _ = run(capsys, "table", "--n-max", "9", "--out", str(out_path),
                     "--cache", str(cache_path))
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("n,k,alpha,method\n") and text.endswith("\n")
    assert cache_path.exists()
    # warm rerun: byte-identical output
    code, _, _ = run(capsys, "table", "--n-max", "9", "--out", str(out_path),
                     "--cache", str(cache_path))
    assert code == 0 and out_path.read_text() == text


def test_table_timeout_exit_3(tmp_path, capsys):
    code, out, err = run(capsys, "table", "--n-max", "13", "--budget-secs", "1e-9",
                         "--out", str(tmp_path / "t.csv"))
    assert code == 3
    assert "budget" in err


def test_conjecture_text(capsys):
    code, out, _ = run(capsys, "conjecture", "--n-max", "10")
    assert code == 0
    assert "holds on all: True" in out


def test_conjecture_json(capsys):
    code, out, _ = run(capsys, "conjecture", "--n-max", "8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_hold"] is True
    assert payload["n_max"] == 8


def test_decompose_json_schema(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "10", "--k", "2", "--validate", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["width"] == 11
    assert len(payload["bags"]) == 5
    assert all(isinstance(v, int) for bag in payload["bags"] for v in bag)
    assert payload["validation"]["valid"] is True
    assert payload["trivial"] is False


def test_decompose_trivial_flagged(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "5", "--k", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["trivial"] is True and len(payload["bags"]) == 1


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "--n", "16", "--k", "4", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 16 and payload["k"] == 4
    assert payload["size"] == 14 == len(payload["members"])
    assert payload["verified"] is True
    assert all(0 <= v < 32 for v in payload["members"])


def test_construct_rejects_odd_k(capsys):
    code, _, err = run(capsys, "construct", "--n", "15", "--k", "5")
    assert code == 1 and "even k" in err


def test_usage_error_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["alpha", "--n", "10"])  # missing --k
    assert exc.value.code == 1
