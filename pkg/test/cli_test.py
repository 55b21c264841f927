import json

import pytest

from jordkit.algebra import SuperAlgebra
from jordkit.cli import RunConfig, join_negative_values, main, parse_args
from jordkit.conversions import dump_algebra, write_json
from jordkit.fixtures import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def fixture(name):
    return str(fixture_path(name))


# Test argument parsing
def test_parse_defaults():
    config = parse_args(["check", "k10.json"])
    assert config.command == "check"
    assert str(config.algebra) == "k10.json"
    assert (config.seed, config.trials, config.jobs) == (1, 200, 1)
    assert config.output_format == "text"


def test_parse_global_and_local_flags():
    config = parse_args(["--seed", "5", "sub", "probe", "a.json", "--gens", "e", "-vv"])
    assert isinstance(config, RunConfig)
    assert (config.command, config.action) == ("sub", "probe")
    assert config.seed == 5
    assert config.verbosity == 2
    assert config.suite_options().seed == 5


def test_long_options_are_not_abbreviated():
    config = parse_args(["aut", "phi", "--f", "1,1,0,1", "--g", "1,0,0,1"])
    assert (config.f, config.g) == ("1,1,0,1", "1,0,0,1")
    assert config.output_format == "text"
    with pytest.raises(SystemExit) as info:
        parse_args(["check", "k10.json", "--form", "json"])
    assert info.value.code == 2


def test_join_negative_values():
    assert join_negative_values(["builtin", "dt", "--t", "-3/2"]) == [
        "builtin",
        "dt",
        "--t=-3/2",
    ]
    assert join_negative_values(["--f", "-1,0,0,-1", "--t", "2"]) == [
        "--f=-1,0,0,-1",
        "--t",
        "2",
    ]
    assert join_negative_values(["--t", "-v"]) == ["--t", "-v"]
    assert join_negative_values(["--t"]) == ["--t"]


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["sub", "maximal", "v"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_bad_numeric_flags(capsys):
    code, _, err = run(capsys, "verify", "--jobs", "0")
    assert code == 2
    assert "--jobs" in err


# Test builtin
@pytest.mark.parametrize("argv", [["--t", "-3/2"], ["--t=-3/2"]])
def test_builtin_to_stdout(capsys, argv):
    code, out, _ = run(capsys, "builtin", "dt", *argv)
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == ["e", "f", "u", "v"]


def test_builtin_to_file(capsys, tmp_path):
    path = tmp_path / "k3.json"
    code, out, _ = run(capsys, "builtin", "k3", "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["dim_odd"] == 2


def test_builtin_errors(capsys):
    code, _, err = run(capsys, "builtin", "dt", "--t", "0")
    assert code == 2
    assert err.startswith("error:")
    assert run(capsys, "builtin", "dt")[0] == 2
    assert run(capsys, "builtin", "dt", "--t", "x")[0] == 2


def test_builtin_bilinear_with_gram(capsys, tmp_path):
    gram = tmp_path / "gram.json"
    write_json({"rows": [["1", "0"], ["0", "-1"]]}, gram)
    code, out, _ = run(capsys, "builtin", "bilinear", "--gram", str(gram))
    assert code == 0
    assert json.loads(out)["dim_even"] == 3


# Test check
def test_check_passes(capsys):
    code, data = run_json(capsys, "check", fixture("k10.json"))
    assert code == 0
    assert data["passed"] is True
    assert data["algebra"] == "K10"


def test_check_fails_on_broken_table(capsys):
    code, out, _ = run(capsys, "check", fixture("broken.json"))
    assert code == 1
    assert "fail" in out.lower()


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2
    assert "missing.json" in err


def test_check_with_envelope(capsys):
    code, data = run_json(
        capsys, "check", fixture("k3.json"), "--envelope", "2", "--trials", "3"
    )
    assert code == 0
    assert len(data["reports"]) == 4


def test_check_envelope_of_ungraded_algebra(capsys, tmp_path):
    path = tmp_path / "ungraded.json"
    dump_algebra(
        SuperAlgebra.from_products("ungraded", 0, 1, ("u",), {(0, 0): {0: 1}}), path
    )
    code, data = run_json(capsys, "check", str(path), "--envelope", "2")
    assert code == 1
    assert data["passed"] is False
    assert [r["identity"] for r in data["reports"]] == ["grading", "envelope-jordan"]
    assert data["reports"][-1]["status"] == "fail"
    assert data["reports"][-1]["notes"]["reason"] == "ungraded"


# Test iso and aut
def test_iso_verify(capsys):
    code, data = run_json(
        capsys,
        "iso",
        "verify",
        fixture("k10-iso.json"),
        "--from",
        fixture("k10.json"),
        "--to",
        fixture("k10-tensor.json"),
    )
    assert code == 0
    assert data["passed"] is True
    assert data["determinant"] != "0"


def test_aut_phi(capsys):
    code, data = run_json(capsys, "aut", "phi", "--f", "1,1,0,1", "--g", "1,0,0,1")
    assert code == 0
    assert len(data["rows"]) == 10
    assert data["rows"][0][0] == "1"


def test_aut_phi_with_negative_entries(capsys):
    code, data = run_json(
        capsys, "aut", "phi", "--f", "-1,0,0,-1", "--g", "-1,0,0,-1"
    )
    assert code == 0
    assert data["rows"][0][0] == "1"
    assert data["rows"][6][6] == "-1"


def test_aut_phi_rejects_non_symplectic(capsys):
    code, _, _ = run(capsys, "aut", "phi", "--f", "2,0,0,1", "--g", "1,0,0,1")
    assert code == 2


def test_aut_factor(capsys, tmp_path):
    path = tmp_path / "m.json"
    write_json({"rows": [["1", "0", "0", "0"], ["0", "4", "0", "0"],
                         ["0", "0", "1/4", "0"], ["0", "0", "0", "1"]]}, path)
    code, data = run_json(capsys, "aut", "factor", "--matrix", str(path))
    assert code == 0
    assert data["f"]["rows"] == [["2", "0"], ["0", "1/2"]]
    assert data["swap"] is False


def test_aut_factor_non_square(capsys, tmp_path):
    path = tmp_path / "m.json"
    write_json({"rows": [["1", "0", "0", "0"], ["0", "2", "0", "0"],
                         ["0", "0", "1/2", "0"], ["0", "0", "0", "1"]]}, path)
    code, data = run_json(capsys, "aut", "factor", "--matrix", str(path))
    assert code == 1
    assert data == {"non_square": "2"}


def test_aut_factor_not_orthogonal(capsys, tmp_path):
    path = tmp_path / "m.json"
    write_json({"rows": [["2", "0", "0", "0"], ["0", "1", "0", "0"],
                         ["0", "0", "1", "0"], ["0", "0", "0", "1"]]}, path)
    assert run(capsys, "aut", "factor", "--matrix", str(path))[0] == 2


# Test sub
def test_sub_closure(capsys):
    code, data = run_json(
        capsys, "sub", "closure", fixture("k10.json"), "--gens", "e,f,p1,q1"
    )
    assert code == 0
    assert len(data["rows"]) == 5


def test_sub_closure_bad_label(capsys):
    code, _, _ = run(capsys, "sub", "closure", fixture("k10.json"), "--gens", "e,zz")
    assert code == 2


def test_sub_probe_refutes(capsys):
    code, data = run_json(
        capsys,
        "sub",
        "probe",
        fixture("k10.json"),
        "--gens",
        "e,f,p1,q1",
        "--trials",
        "3",
    )
    assert code == 0
    assert data["probe"]["verdict"] == "not-maximal"
    assert data["probe"]["witness"] == "a"


def test_sub_maximal_with_probe(capsys):
    code, data = run_json(capsys, "sub", "maximal", "iii", "--probe", "--trials", "3")
    assert code == 0
    assert len(data["subspace"]["rows"]) == 7
    assert data["probe"]["verdict"] == "probably-maximal"


def test_sub_structure_with_deviation(capsys):
    code, out, _ = run(capsys, "sub", "structure", "ii")
    assert code == 0
    assert "DEVIATION" in out


def test_sub_conjugate(capsys):
    code, data = run_json(capsys, "sub", "conjugate", "iv")
    assert code == 0
    assert len(data["image"]["rows"]) == 7


# Test verify
def test_verify_is_deterministic(capsys):
    argv = ["verify", "--trials", "4", "--envelope-degree", "2"]
    first = run_json(capsys, *argv)
    second = run_json(capsys, "verify-paper", *argv[1:], "--jobs", "2")
    assert first == second
    code, data = first
    assert code == 0
    assert data["passed"] is True
    assert [c["claim"] for c in data["deviations"]] == ["structure.ii"]


def test_verify_command_names():
    assert parse_args(["verify-paper"]).command == "verify-paper"
    assert parse_args(["verify"]).command == "verify"
