"""Command-line behavior: outputs, exit codes, determinism, caching."""

import json

import pytest

from jackideal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_character(capsys):
    code, out, _ = run_cli(capsys, "character", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4")
    assert code == 0
    assert json.loads(out) == [0, 0, 1, 1, 2]


def test_partitions_enumerate_and_single(capsys):
    code, out, _ = run_cli(capsys, "partitions", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["partitions"]["4"] == [[4], [3, 1]]
    code, out, _ = run_cli(capsys, "partitions", "--k", "1", "--r", "2",
                           "--n", "2", "--lambda", "3,1")
    assert code == 0 and json.loads(out)["admissible"] is True
    code, out, _ = run_cli(capsys, "partitions", "--k", "1", "--r", "2",
                           "--n", "2", "--lambda", "2,2")
    assert json.loads(out)["admissible"] is False


def test_jack_symbolic_output(capsys):
    code, out, _ = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--symbolic")
    assert code == 0
    obj = json.loads(out)
    assert obj["basis"] == "msym"
    by_part = {tuple(t["partition"]): t["coeff"] for t in obj["terms"]}
    # 2 beta / (1 + beta) appears as a num/den coefficient pair
    assert by_part[(1, 1)]["num"][1]["num"] == "2"
    assert by_part[(2,)] == {"num": [{"num": "1", "den": "1"}],
                             "den": [{"num": "1", "den": "1"}]}


def test_jack_specialized_and_evaluated(capsys):
    code, out, _ = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--k", "1", "--r", "2", "--format", "text")
    assert code == 0 and out.strip() == "(1)*m[2] + (-2)*m[1,1]"
    code, out, _ = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--beta=-1/2", "--format", "text")
    assert code == 0 and out.strip() == "(1)*m[2] + (-2)*m[1,1]"


def test_jack_pole_exit(capsys):
    code, _, err = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--beta=-1")
    assert code == 1 and "pole" in err


def test_invalid_parameters_exit(capsys):
    code, _, err = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--k", "1", "--r", "3")
    assert code == 2 and "coprime" in err
    code, _, err = run_cli(capsys, "verify", "phi3", "--r", "4")
    assert code == 2 and "coprime" in err


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "jack", "--lambda", "1,2", "--n", "2")
    assert code == 2 and "partition" in err
    code, _, err = run_cli(capsys, "jack", "--lambda", "2", "--n", "2",
                           "--k", "1")
    assert code == 2 and "together" in err
    with pytest.raises(SystemExit) as ei:
        main(["no-such-command"])
    assert ei.value.code == 2


def test_specialize_principal(capsys):
    code, out, _ = run_cli(capsys, "specialize-principal", "--lambda", "2",
                           "--n", "2", "--format", "text")
    assert code == 0 and out.strip() == "(2 + 4*beta)/(1 + beta)"
    code, out, _ = run_cli(capsys, "specialize-principal", "--lambda", "2",
                           "--n", "2", "--beta=-1/3", "--format", "text")
    assert code == 0 and out.strip() == "1"


def test_ideal_basis_and_member(capsys, tmp_path):
    out_dir = tmp_path / "basis"
    code, out, _ = run_cli(capsys, "ideal", "basis", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4", "--out", str(out_dir))
    assert code == 0
    assert json.loads(out)["character"] == [0, 0, 1, 1, 2]
    assert sorted(p.name for p in out_dir.iterdir()) == [
        "degree_%02d.json" % d for d in range(5)]

    poly = tmp_path / "input.json"
    poly.write_text(json.dumps({
        "n": 2, "basis": "msym",
        "terms": [{"partition": [3], "coeff": {"num": "1", "den": "1"}},
                  {"partition": [2, 1], "coeff": {"num": "-1", "den": "1"}}]}))
    code, out, _ = run_cli(capsys, "ideal", "member", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4", "--input", str(poly))
    assert code == 0
    obj = json.loads(out)
    assert obj["member"] and obj["combination"] == [
        {"partition": [3], "coeff": {"num": "1", "den": "1"}}]

    poly.write_text(json.dumps({
        "n": 2, "basis": "msym",
        "terms": [{"partition": [1, 1], "coeff": {"num": "1", "den": "1"}}]}))
    code, out, _ = run_cli(capsys, "ideal", "member", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4", "--input", str(poly))
    assert code == 1 and json.loads(out)["obstruction"] == [1, 1]


def test_member_rejects_asymmetric_expanded(capsys, tmp_path):
    poly = tmp_path / "bad.json"
    poly.write_text(json.dumps({
        "n": 2, "basis": "expanded",
        "terms": [{"exponents": [2, 1], "coeff": {"num": "1", "den": "1"}}]}))
    code, _, err = run_cli(capsys, "ideal", "member", "--k", "1", "--r", "2",
                           "--n", "2", "--dmax", "4", "--input", str(poly))
    assert code == 2 and "input" in err.lower()


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "wheel", "--k", "2", "--n", "2",
                           "--dmax", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["suite"] == "wheel" and obj["summary"]["fail"] == 0
    code, out, _ = run_cli(capsys, "verify", "phi3", "--r", "3",
                           "--format", "text")
    assert code == 0 and "PASS" in out and "FAIL" not in out


def test_verify_commutators_seeded(capsys):
    code, out, _ = run_cli(capsys, "verify", "commutators", "--n", "2",
                           "--dmax", "3", "--trials", "2", "--seed", "11",
                           "--tmax", "2")
    assert code == 0
    assert json.loads(out)["params"]["seed"] == 11


def test_deterministic_output(capsys):
    args = ("verify", "regularity", "--k", "1", "--r", "2", "--n", "2",
            "--dmax", "5")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_cache_dir_persists(capsys, tmp_path):
    cache = tmp_path / "cache"
    args = ("jack", "--lambda", "3,1", "--n", "3", "--symbolic",
            "--cache-dir", str(cache))
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    files = sorted(p.name for p in cache.iterdir())
    assert any(f.startswith("jack_n3") for f in files)
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
