"""End-to-end CLI runs: outputs, determinism and exit codes."""

import json
import subprocess
import sys

import pytest

from nrtlab.cli import EXIT_CHECK_FAILED, EXIT_CONFIG_ERROR, EXIT_OK, main

ALL_COMMANDS = ["verify-identity", "indicator", "runge", "sign-map", "enclosure"]
SWEEP_COLUMNS = "N_or_t,eps,value,cond_Q,discarded_share,verdict"


def read(path):
    return path.read_bytes()


@pytest.mark.parametrize("command", ALL_COMMANDS)
def test_default_run_passes_and_writes_outputs(tmp_path, command):
    out = tmp_path / "out"
    assert main([command, "--out", str(out)]) == EXIT_OK
    for suffix in (".csv", ".json", ".svg"):
        target = out / f"{command}{suffix}"
        assert target.is_file() and target.stat().st_size > 0


@pytest.mark.parametrize("command", ALL_COMMANDS)
def test_outputs_are_byte_deterministic(tmp_path, command):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    assert main([command, "--out", str(out1)]) == EXIT_OK
    assert main([command, "--out", str(out2)]) == EXIT_OK
    for suffix in (".csv", ".json", ".svg"):
        assert read(out1 / f"{command}{suffix}") == read(out2 / f"{command}{suffix}")


def test_json_payload_shape(tmp_path):
    out = tmp_path / "out"
    main(["indicator", "--out", str(out)])
    payload = json.loads((out / "indicator.json").read_text())
    assert set(payload) == {"experiment", "config", "summary"}
    assert payload["experiment"] == "indicator"
    assert "out_dir" not in payload["config"]
    assert payload["summary"]["passed"] is True
    verdicts = [entry["verdict"] for entry in payload["summary"]["regions"]]
    assert verdicts == ["Bounded", "BlowUp"]


def test_csv_headers(tmp_path):
    out = tmp_path / "out"
    for command in ("indicator", "runge", "enclosure", "sign-map"):
        main([command, "--out", str(out)])
    assert (out / "indicator.csv").read_text().splitlines()[0] == "region," + SWEEP_COLUMNS
    runge_header = (out / "runge.csv").read_text().splitlines()[0]
    assert runge_header.startswith(SWEEP_COLUMNS)
    assert (out / "enclosure.csv").read_text().splitlines()[0].startswith("tau,re,im,modulus,log_over_tau")
    assert (out / "sign-map.csv").read_text().splitlines()[0] == "y3,x1,x2,value"


def test_sign_map_row_count(tmp_path):
    out = tmp_path / "out"
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"y3_values": [0.2, 0.1], "sign_resolution": 41}))
    assert main(["sign-map", "--config", str(config), "--out", str(out)]) == EXIT_OK
    lines = (out / "sign-map.csv").read_text().splitlines()
    assert len(lines) == 1 + 2 * 41 * 41


def test_perturbed_pairing_fails(tmp_path):
    out = tmp_path / "out"
    code = main(["verify-identity", "--perturb-pairing", "1.01", "--out", str(out)])
    assert code == EXIT_CHECK_FAILED
    payload = json.loads((out / "verify-identity.json").read_text())
    assert payload["summary"]["passed"] is False
    assert payload["summary"]["max_residual"] > 1e-3


def test_unknown_config_key_is_config_error(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"bogus": 1}))
    assert main(["indicator", "--config", str(config)]) == EXIT_CONFIG_ERROR


def test_missing_config_file_is_config_error(tmp_path):
    assert main(["indicator", "--config", str(tmp_path / "nope.json")]) == EXIT_CONFIG_ERROR


def test_malformed_json_is_config_error(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text("{not json")
    assert main(["enclosure", "--config", str(config)]) == EXIT_CONFIG_ERROR


def test_region_outside_ambient_is_config_error(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"regions": [{"shape": "disk", "center": [1.9, 0.0], "radius": 0.5}]}))
    assert main(["indicator", "--config", str(config), "--out", str(tmp_path / "out")]) == EXIT_CONFIG_ERROR


def test_runge_geometry_violation_is_config_error(tmp_path):
    # Cavity meets the closed ball of radius t = 0.5 about the origin.
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"runge_region": {"shape": "disk", "center": [0.4, 0.0], "radius": 0.3}}))
    assert main(["runge", "--config", str(config), "--out", str(tmp_path / "out")]) == EXIT_CONFIG_ERROR


def test_expect_mismatch_fails(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(
        json.dumps({"regions": [{"shape": "disk", "center": [0.0, 0.0], "radius": 0.5, "expect": "BlowUp"}]})
    )
    out = tmp_path / "out"
    assert main(["indicator", "--config", str(config), "--out", str(out)]) == EXIT_CHECK_FAILED
    payload = json.loads((out / "indicator.json").read_text())
    assert payload["summary"]["failures"]


def test_strict_turns_inconclusive_into_failure(tmp_path):
    # Two cutoff orders cannot produce a verdict; strict makes that fatal.
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"orders": [4, 8], "regions": [{"shape": "disk", "center": [0.0, 0.0], "radius": 0.5}]}))
    out = tmp_path / "out"
    assert main(["indicator", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert main(["indicator", "--config", str(config), "--strict", "--out", str(out)]) == EXIT_CHECK_FAILED


def test_origin_on_boundary_region_is_refused(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"regions": [{"shape": "disk", "center": [0.5, 0.0], "radius": 0.5}]}))
    out = tmp_path / "out"
    assert main(["indicator", "--config", str(config), "--out", str(out)]) == EXIT_OK
    body = (out / "indicator.csv").read_text()
    assert "refused" in body
    assert main(["indicator", "--config", str(config), "--strict", "--out", str(out)]) == EXIT_CHECK_FAILED


def test_flag_overrides_reach_config_echo(tmp_path):
    out = tmp_path / "out"
    assert main(["verify-identity", "--R", "3.0", "--seed", "11", "--out", str(out)]) == EXIT_OK
    payload = json.loads((out / "verify-identity.json").read_text())
    assert payload["config"]["boundary_radius"] == 3.0
    assert payload["config"]["seed"] == 11


def test_invalid_ambient_radius_is_config_error(tmp_path):
    assert main(["verify-identity", "--R", "0.5"]) == EXIT_CONFIG_ERROR


def test_missing_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_console_script_entry_point(tmp_path):
    out = tmp_path / "out"
    proc = subprocess.run(
        [sys.executable, "-m", "nrtlab.cli", "enclosure", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert "PASS" in proc.stdout
    assert (out / "enclosure.json").is_file()
