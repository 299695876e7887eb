import json
import shutil
import subprocess

import numpy as np
import pytest

from rlab import make_step, maximal, step_from_json
from rlab.cli import run

CHI_JSON = '{"breakpoints": [0.0, 0.25, 1.0], "values": [1.0, 0.0]}'
L22 = '{"kind": "lorentz_pq", "p": 2, "q": 2}'
GRAND22 = '{"kind": "grand_lorentz_pq", "p": 2, "q": 2}'
UNIT_MEASURE = '{"density": {"breakpoints": [0.0, 1.0], "values": [1.0]}}'


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- norm

def test_norm_prints_value(capsys):
    code, out, err = _run(capsys, ["norm", "--spec", L22, "--fn", CHI_JSON])
    assert code == 0
    assert out == "0.5\n"
    assert err == ""


def test_norm_out_file_payload(tmp_path, capsys):
    dest = tmp_path / "norm.json"
    code, out, _ = _run(capsys, ["norm", "--spec", GRAND22, "--fn", CHI_JSON,
                                 "--grid", "128", "--out", str(dest)])
    assert code == 0
    payload = json.loads(dest.read_text())
    assert payload["grid"] == 128
    assert payload["value"] == pytest.approx(float(out), rel=1e-15)
    assert 0.0 < payload["eps_star"] < 1.0
    assert payload["endpoint_limit"] is None


def test_norm_reads_spec_and_fn_from_files(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    fn_path = tmp_path / "fn.json"
    spec_path.write_text(L22)
    fn_path.write_text(CHI_JSON)
    code, out, _ = _run(capsys, ["norm", "--spec", str(spec_path),
                                 "--fn", str(fn_path)])
    assert code == 0 and out == "0.5\n"


# ---------------------------------------------------------------- rearrange

def test_rearrange_example(capsys):
    fn = '{"breakpoints": [0.0, 0.2, 0.5, 1.0], "values": [3.0, 1.0, 2.0]}'
    code, out, _ = _run(capsys, ["rearrange", "--fn", fn])
    assert code == 0
    payload = json.loads(out)
    assert payload["breakpoints"] == [0.0, 0.2, 0.7, 1.0]
    assert payload["values"] == [3.0, 2.0, 1.0]
    # emitted JSON parses back into a valid step function
    assert step_from_json(payload) == make_step([0.0, 0.2, 0.7, 1.0],
                                                [3.0, 2.0, 1.0])


def test_rearrange_with_measure(capsys):
    fn = '{"breakpoints": [0.0, 0.5, 1.0], "values": [1.0, 2.0]}'
    measure = ('{"density": {"breakpoints": [0.0, 0.5, 1.0], '
               '"values": [2.0, 0.0]}}')
    code, out, _ = _run(capsys, ["rearrange", "--fn", fn,
                                 "--measure", measure])
    assert code == 0
    payload = json.loads(out)
    # only the first half carries mass (total 1), where f = 1
    assert payload["values"] == [1.0]
    assert payload["breakpoints"] == [0.0, 1.0]


# ---------------------------------------------------------------- maximal

def test_maximal_sampled_output(capsys):
    code, out, _ = _run(capsys, ["maximal", "--fn", CHI_JSON,
                                 "--samples", "8"])
    assert code == 0
    payload = json.loads(out)
    x = np.asarray(payload["x"])
    assert x.tolist() == [(i + 0.5) / 8 for i in range(8)]
    f = make_step([0.0, 0.25, 1.0], [1.0, 0.0])
    assert np.allclose(payload["values"], maximal(f)(x), rtol=1e-15)


# ---------------------------------------------------------------- embed-check

def test_embed_check_domination(capsys):
    nu = '{"density": {"breakpoints": [0.0, 1.0], "values": [2.0]}}'
    code, out, _ = _run(capsys, ["embed-check", "--check", "domination",
                                 "--mu", UNIT_MEASURE, "--nu", nu])
    assert code == 0
    payload = json.loads(out)
    assert payload["condition_value"] == 2.0
    assert payload["holds"] is True


def test_embed_check_mutual_ac(capsys):
    half = ('{"density": {"breakpoints": [0.0, 0.5, 1.0], '
            '"values": [1.0, 0.0]}}')
    code, out, _ = _run(capsys, ["embed-check", "--check", "mutual-ac",
                                 "--mu", UNIT_MEASURE, "--nu", half])
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is False
    assert payload["condition_value"] == "inf"


def test_embed_check_wholds(capsys):
    code, out, _ = _run(capsys, ["embed-check", "--check", "wholds",
                                 "--p", "2", "--q", "2",
                                 "--weight", '{"power_weight": {"alpha": 0.0}}'])
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["condition_value"] == 1.0


def test_embed_check_empirical_identity(capsys):
    code, out, _ = _run(capsys, [
        "embed-check", "--check", "empirical",
        "--source", GRAND22, "--target", GRAND22,
        "--corpus-size", "4", "--seed", "3", "--grid", "64"])
    assert code == 0
    payload = json.loads(out)
    assert payload["condition_value"] == 1.0
    assert payload["empirical_constant"] == 1.0
    assert payload["seed"] == 3
    assert payload["witness"].startswith("corpus[")


def test_embed_check_missing_parameters(capsys):
    code, _, err = _run(capsys, ["embed-check", "--check", "wholds",
                                 "--p", "2"])
    assert code == 1
    assert "required" in err


# ---------------------------------------------------------------- embed-probe

def test_embed_probe_csv(capsys):
    code, out, _ = _run(capsys, ["embed-probe", "--p", "2", "--q", "2",
                                 "--r", "4", "--s", "4",
                                 "--a-list", "1e-4,1e-5,1e-6",
                                 "--grid", "128"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# grid=128 p=2 q=2 r=4 s=4")
    assert lines[1] == "a,source_norm,target_norm,ratio"
    assert len(lines) == 5
    ratios = [float(line.split(",")[3]) for line in lines[2:]]
    assert ratios[0] < ratios[1] < ratios[2]


def test_embed_probe_bad_a_list(capsys):
    code, _, err = _run(capsys, ["embed-probe", "--p", "2", "--q", "2",
                                 "--r", "4", "--s", "4",
                                 "--a-list", "0.1,zebra"])
    assert code == 1
    assert "validation error" in err


# ---------------------------------------------------------------- sweeps

def test_mollify_sweep_csv(capsys):
    code, out, _ = _run(capsys, [
        "mollify-sweep", "--fn", CHI_JSON,
        "--kernel", '{"kind": "box", "half_width": 1.0}',
        "--t-list", "0.2,0.1", "--cells", "256", "--grid", "64",
        "--spec", '{"kind": "lambda_grand", "p": 2,'
                  ' "weight": {"power_weight": {"alpha": 0.0}}}'])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# grid=64 kernel=box"
    assert lines[1].startswith("# cells=256 max_err_drift=")
    assert lines[2] == "t,err,conv_norm,maximal_norm,ratio"
    assert len(lines) == 5
    first = [float(tok) for tok in lines[3].split(",")]
    second = [float(tok) for tok in lines[4].split(",")]
    assert first[0] == 0.2 and second[0] == 0.1
    assert second[1] < first[1]  # err decreasing
    assert max(first[4], second[4]) <= 1.0 + 1e-9


def test_eps_profile_csv_and_grid_header(capsys):
    code, out, _ = _run(capsys, ["eps-profile", "--fn", CHI_JSON,
                                 "--spec", GRAND22, "--grid", "64"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# grid=64 value=")
    assert "eps_star=" in lines[0]
    assert lines[1] == "eps,value"
    assert len(lines) == 2 + 64


def test_eps_profile_rejects_non_grand(capsys):
    code, _, err = _run(capsys, ["eps-profile", "--fn", CHI_JSON,
                                 "--spec", L22])
    assert code == 1
    assert "grand" in err


# ---------------------------------------------------------------- environment

def test_rlab_grid_env_respected(capsys, monkeypatch):
    monkeypatch.setenv("RLAB_GRID", "32")
    code, out, _ = _run(capsys, ["eps-profile", "--fn", CHI_JSON,
                                 "--spec", GRAND22])
    assert code == 0
    assert out.splitlines()[0].startswith("# grid=32 ")
    # explicit flag wins over the environment
    code, out, _ = _run(capsys, ["eps-profile", "--fn", CHI_JSON,
                                 "--spec", GRAND22, "--grid", "16"])
    assert out.splitlines()[0].startswith("# grid=16 ")


def test_rlab_grid_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("RLAB_GRID", "many")
    code, _, err = _run(capsys, ["norm", "--spec", GRAND22, "--fn", CHI_JSON])
    assert code == 1
    assert "RLAB_GRID" in err


def test_grid_too_small(capsys):
    code, _, err = _run(capsys, ["norm", "--spec", GRAND22, "--fn", CHI_JSON,
                                 "--grid", "4"])
    assert code == 1


# ---------------------------------------------------------------- determinism

def test_probe_output_is_deterministic(tmp_path, capsys):
    argv = ["embed-probe", "--p", "2", "--q", "1.5", "--r", "3", "--s", "3",
            "--a-list", "1e-2,1e-3", "--grid", "64"]
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(argv + ["--out", str(a)]) == 0
    assert run(argv + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


# ---------------------------------------------------------------- exit codes

def test_exit_code_on_malformed_json(capsys):
    code, _, err = _run(capsys, ["norm", "--spec", L22, "--fn", "{bad json"])
    assert code == 1
    assert "validation error" in err


def test_exit_code_on_unknown_space_kind(capsys):
    code, _, err = _run(capsys, ["norm", "--fn", CHI_JSON,
                                 "--spec", '{"kind": "banach", "p": 2}'])
    assert code == 1


def test_exit_code_on_missing_file(capsys):
    code, _, err = _run(capsys, ["norm", "--spec", L22,
                                 "--fn", "no-such-file.json"])
    assert code == 1


def test_exit_code_on_unknown_verb(capsys):
    assert run(["transmogrify"]) == 1
    capsys.readouterr()


def test_exit_code_on_missing_required_flag(capsys):
    assert run(["norm", "--fn", CHI_JSON]) == 1
    capsys.readouterr()


@pytest.mark.skipif(shutil.which("rlab") is None,
                    reason="console script not on PATH")
def test_console_script_entry_point():
    proc = subprocess.run(["rlab", "norm", "--spec", L22, "--fn", CHI_JSON],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "0.5\n"
