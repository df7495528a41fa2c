import io
import json

import pytest

from stairgcs.cli import ConfigError, RunConfig, main, run


def records(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out.strip().splitlines()
    return code, [json.loads(line) for line in out]


@pytest.mark.parametrize("argv", [
    ["verify", "longid", "--k", "3", "--trials", "5"],
    ["verify", "jacobi", "--trials", "5"],
    ["verify", "main-identity", "--n", "5", "--a", "4", "--b", "1", "--trials", "2"],
    ["verify", "detphi", "--n", "3", "--a", "3", "--b", "0", "--ring", "symbolic"],
    ["verify", "band", "--k", "3", "--n", "5"],
    ["verify", "theta", "--n", "3"],
    ["verify", "regularity", "--k", "2", "--n", "4"],
    ["explore", "yz", "--n", "3"],
])
def test_verify_commands_pass(argv, capsys):
    code, recs = records(argv, capsys)
    assert code == 0
    assert recs[-1]["summary"] and recs[-1]["passed"] == recs[-1]["checks"] > 0
    assert all(r["pass"] for r in recs[:-1])


def test_same_seed_same_output(capsys):
    argv = ["verify", "main-identity", "--n", "4", "--a", "4", "--b", "0", "--seed", "9"]
    _, a = records(argv, capsys)
    _, b = records(argv, capsys)
    strip = lambda rs: [{k: v for k, v in r.items() if k != "elapsed"} for r in rs]
    assert strip(a) == strip(b)


def test_seed_build_then_mutate_special(tmp_path, capsys):
    path = tmp_path / "s4.json"
    dot = tmp_path / "s4.dot"
    code, recs = records(["seed", "build", "double", "--n", "4", "--out", str(path), "--dot", str(dot)], capsys)
    assert code == 0 and recs[0]["vertices"] == 32 and recs[0]["isolated"] == 3
    assert dot.read_text().startswith("digraph")
    code, recs = records(["seed", "mutate", "--in", str(path), "--at", "phi1"], capsys)
    assert code == 0 and recs[0]["matches_phi1_star"] is True


def test_band_seed_special_mutation(tmp_path, capsys):
    path = tmp_path / "b.json"
    records(["seed", "build", "band", "--k", "3", "--n", "5", "--out", str(path)], capsys)
    code, recs = records(["seed", "mutate", "--in", str(path), "--at", "tphi1"], capsys)
    assert code == 0 and recs[0]["matches_phi1_star"] is True


def test_symbolic_cap_is_a_config_error(capsys):
    assert main(["verify", "main-identity", "--n", "6", "--a", "6", "--b", "0", "--ring", "symbolic"]) == 2
    assert "capped" in capsys.readouterr().err


def test_bad_shape_is_reported(capsys):
    assert main(["verify", "main-identity", "--n", "3", "--a", "2", "--b", "1"]) == 2
    assert "a > b + 1" in capsys.readouterr().err


def test_missing_vertex(tmp_path, capsys):
    path = tmp_path / "s.json"
    records(["seed", "build", "double", "--n", "3", "--out", str(path)], capsys)
    assert main(["seed", "mutate", "--in", str(path), "--at", "nowhere"]) == 2
    with pytest.raises(ConfigError):
        run(RunConfig(command="seed", target="mutate", inp=str(path)), io.StringIO())
