import json
import os

import pytest

from metaice.cli import RunConfig, build_parser, load_config_file, main, make_config, run

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")

PARTITION_ARGS = ["partition", "--lambda", "0,0", "--rows", "2", "--n", "1", "--type", "gamma"]


def run_cli(capsys, args):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_RUNS = [
    ("partition_gamma_lambda_0_0_n1.json", PARTITION_ARGS),
    (
        "partition_gamma_lambda_1_0_n2.json",
        ["partition", "--lambda", "1,0", "--rows", "2", "--n", "2", "--type", "gamma"],
    ),
    (
        "partition_gamma_lambda_1_0_n3.json",
        ["partition", "--lambda", "1,0", "--rows", "2", "--n", "3", "--type", "gamma"],
    ),
    ("weights_gamma_n1.json", ["weights", "--type", "gamma", "--n", "1"]),
    ("weights_delta_n1.json", ["weights", "--type", "delta", "--n", "1"]),
    ("weights_gamma_n2.json", ["weights", "--type", "gamma", "--n", "2"]),
    ("weights_delta_n2.json", ["weights", "--type", "delta", "--n", "2"]),
] + [
    (
        f"weights_tilted_{x}_{y}_n{n}.json",
        ["weights", "--tilted", "--x", x, "--y", y, "--n", str(n)],
    )
    for x in ("gamma", "delta")
    for y in ("gamma", "delta")
    for n in (1, 2)
] + [
    (
        f"verify_ybe_{x}_{y}_n2.json",
        ["verify-ybe", "--x", x, "--y", y, "--n", "2"],
    )
    for x in ("gamma", "delta")
    for y in ("gamma", "delta")
] + [
    (
        "train_trace_lambda_2_1_1_mu_4_n2.json",
        ["train-trace", "--lambda", "2,1,1", "--mu", "4", "--n", "2"],
    ),
    ("tokuyama_lambda_1_0.json", ["tokuyama", "--lambda", "1,0"]),
]


@pytest.mark.parametrize("name,args", GOLDEN_RUNS, ids=[name for name, _ in GOLDEN_RUNS])
def test_command_matches_golden(capsys, name, args):
    code, out, _ = run_cli(capsys, args)
    assert code == 0
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as f:
        assert out == f.read(), f"{' '.join(args)} differs from {name}"


def test_every_golden_file_is_checked():
    checked = {name for name, _ in GOLDEN_RUNS}
    assert set(os.listdir(GOLDEN)) == checked


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, PARTITION_ARGS)
    _, second, _ = run_cli(capsys, PARTITION_ARGS + ["--workers", "2"])
    assert first == second, "worker count must not change the report"


def test_timing_adds_elapsed(capsys):
    _, out, _ = run_cli(capsys, PARTITION_ARGS + ["--timing"])
    assert "elapsed" in json.loads(out)
    _, out, _ = run_cli(capsys, PARTITION_ARGS)
    assert "elapsed" not in json.loads(out)


@pytest.mark.parametrize(
    "args",
    [
        ["partition", "--lambda", "1,2"],
        ["partition"],
        ["partition", "--lambda", "0,0", "--n", "0"],
        ["partition", "--lambda", "0,0", "--method", "guess"],
        ["verify-two-row", "--top", "1,0", "--bottom", "0"],
        ["tokuyama", "--lambda", "0,0", "--n", "2"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, args):
    code, out, _ = run_cli(capsys, args)
    assert code == 2
    assert out == ""


def test_verify_ybe_passes(capsys):
    code, out, _ = run_cli(capsys, ["verify-ybe", "--x", "gamma", "--y", "delta", "--n", "2"])
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    assert report["identity"] == "ybe-gamma-delta"
    assert report["cases"] == 64 * 16


def test_failing_check_exits_one(capsys):
    code, out, _ = run_cli(
        capsys, ["tokuyama", "--lambda", "0,0", "--root-sign", "positive"]
    )
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_transfer_method(capsys):
    _, out, _ = run_cli(capsys, PARTITION_ARGS + ["--method", "transfer"])
    report = json.loads(out)
    assert report["value"] == "z1 - v*z2"
    assert report["method"] == "transfer"


def test_two_row_from_partitions(capsys):
    code, out, _ = run_cli(
        capsys, ["train-trace", "--lambda", "2,1,1", "--mu", "4", "--n", "2"]
    )
    report = json.loads(out)
    assert code == 0
    assert report["details"]["spec"]["top_minus"] == [4, 2, 1]
    assert report["details"]["spec"]["bottom_minus"] == [4]


def test_weights(capsys):
    _, out, _ = run_cli(capsys, ["weights", "--type", "delta", "--n", "3"])
    assert json.loads(out)["count"] == 10
    _, out, _ = run_cli(capsys, ["weights", "--tilted", "--x", "delta", "--y", "gamma"])
    assert json.loads(out)["count"] == 6


def test_states(capsys):
    _, out, _ = run_cli(capsys, ["states", "--lambda", "0,0"])
    report = json.loads(out)
    assert report["state_count"] == 2
    assert report["value"] == "z1 - v*z2"
    assert len(report["states"][0]["charges"]) == 2


def test_text_format(capsys):
    _, out, _ = run_cli(capsys, PARTITION_ARGS + ["--format", "text"])
    assert "value: z1 - v*z2" in out.splitlines()


def test_config_file(tmp_path, capsys):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"lambda": [0, 0], "type": "gamma", "n": 2}))
    _, out, _ = run_cli(capsys, ["partition", "--config", str(path), "--n", "1"])
    report = json.loads(out)
    assert report["config"]["n"] == 1, "flags take precedence over the file"
    assert report["value"] == "z1 - v*z2"


def test_load_config_file_rejects_unknown_keys(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"colour": "blue"}))
    with pytest.raises(ValueError):
        load_config_file(str(path))
    path.write_text("[1, 2]")
    with pytest.raises(ValueError):
        load_config_file(str(path))


def test_make_config_defaults():
    config = make_config({"command": "partition", "lam": "1,0"})
    assert config == RunConfig(command="partition", lam="1,0")
    assert "workers" not in config.echo()


def test_run_unknown_command():
    with pytest.raises(ValueError):
        run(RunConfig(command="nothing"))


def test_parser_suppresses_unset_options():
    options = vars(build_parser().parse_args(["verify-ybe", "--x", "delta"]))
    assert options == {"command": "verify-ybe", "x": "delta"}
