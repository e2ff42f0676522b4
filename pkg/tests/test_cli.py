# -*- coding: utf-8 -*-
"""End-to-end runs of the zicgdof command through main()."""

import json

import pytest

from src.core.achievability import classify_case, corner_points
from src.core.errors import VerificationFailure
from src.core.gdof import sum_gdof_closed_form
from src.core.types import AntennaConfig
from src.main import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main
from src.utils.serialization import format_rational, parse_alpha_grid


@pytest.fixture
def cli(tmp_path, monkeypatch):
    """main() bound to a throwaway settings file"""
    monkeypatch.delenv("ZICGDOF_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("ZICGDOF_CONFIG", raising=False)
    settings = str(tmp_path / "settings.json")

    def invoke(*args):
        return main(["--settings", settings, "--log-level", "WARNING", *args])

    return invoke


def test_region_json(cli, capsys):
    assert cli("region", "--config", "2,2,3,2", "--alpha", "0.4") == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["config"] == [2, 2, 3, 2]
    assert data["alpha"] == "2/5"
    assert ["8/5", "2/1"] in data["vertices"]
    assert {"a1": "1/1", "a2": "1/1", "b": "18/5"} in data["halfplanes"]


def test_region_csv_to_file(cli, tmp_path, capsys):
    target = tmp_path / "out" / "region.csv"
    assert cli("region", "--config", "2,2,3,2", "--alpha", "2/5", "--format", "csv", "-o", str(target)) == EXIT_OK
    assert capsys.readouterr().out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "d1,d2"
    assert "8/5,2/1" in lines


def test_bad_config_is_a_usage_error(cli, capsys):
    assert cli("region", "--config", "2,2,x,2", "--alpha", "1") == EXIT_USAGE
    assert "--config" in capsys.readouterr().err


def test_missing_alpha_is_a_usage_error(cli, capsys):
    assert cli("region", "--config", "2,2,3,2") == EXIT_USAGE
    assert "--alpha" in capsys.readouterr().err


def test_negative_alpha_is_rejected(cli, capsys):
    assert cli("region", "--config", "2,2,3,2", "--alpha", "-1/2") == EXIT_USAGE
    assert "--alpha" in capsys.readouterr().err


def test_perfect_region_needs_a_canonical_tuple(cli, capsys):
    assert cli("region", "--config", "3,2,1,1", "--alpha", "1", "--csit", "perfect") == EXIT_USAGE
    assert "zicgdof region" in capsys.readouterr().err


def test_missing_command(cli, capsys):
    assert cli() == EXIT_USAGE
    assert "command" in capsys.readouterr().err


def test_sum_series(cli, capsys):
    assert cli("sum", "--config", "1,2,1,2", "--alpha-grid", "0:3:0.1") == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    cfg = AntennaConfig(1, 2, 1, 2)
    grid = parse_alpha_grid("0:3:1/10")
    assert set(data["series"]) == {"delayed", "perfect"}
    assert len(data["series"]["delayed"]) == len(grid) == 31
    for (alpha, value), expected in zip(data["series"]["delayed"], grid):
        assert alpha == format_rational(expected)
        assert value == format_rational(sum_gdof_closed_form(cfg, expected))
    assert data["v_shaped"] == {"delayed": True, "perfect": True}
    # equal on the weak side, apart strictly inside (1, 3)
    assert data["divergence"] == [["11/10", "29/10"]]


def test_sum_csv(cli, capsys):
    assert cli("sum", "--config", "2,2,3,2", "--alpha-grid", "0,1,2", "--csit", "delayed", "--format", "csv") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "alpha,delayed"
    assert len(lines) == 4


def test_compare_json(cli, capsys):
    assert cli("compare", "--config", "1,2,1,1", "--alpha", "0.4") == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["config"] == [1, 2, 1, 1]
    assert data["delayed_equals_perfect"] is False
    assert data["delayed_subset_perfect"] is True


def test_compare_svg_with_output_prints_the_verdict(cli, tmp_path, capsys):
    target = tmp_path / "compare.svg"
    assert cli("compare", "--config", "2,2,3,2", "--alpha", "1", "--format", "svg", "-o", str(target)) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["delayed_equals_perfect"] is True
    svg = target.read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert svg.count("<polygon") == 3


def test_corners(cli, capsys):
    assert cli("corners", "--config", "2,2,3,2", "--alpha", "1.4") == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    cfg = AntennaConfig(2, 2, 3, 2)
    assert data["case"] == classify_case(cfg, "1.4")
    assert len(data["corners"]) == len(corner_points(cfg, "1.4").points)
    assert all("a2" in corner and "d_eta" in corner for corner in data["corners"])


def test_verify_small_sweep(cli, tmp_path, capsys):
    jsonl = tmp_path / "records.jsonl"
    assert cli("verify", "--max-antennas", "2", "--alpha-grid", "0:2:1/2", "--jsonl", str(jsonl)) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["checked"] > 0
    assert summary["passed"] == summary["checked"]
    assert summary["failures"] == []
    records = [json.loads(line) for line in jsonl.read_text(encoding="utf-8").splitlines()]
    assert len(records) == summary["checked"]
    assert {r["status"] for r in records} == {"pass"}


def test_verify_reports_failures_with_exit_two(cli, monkeypatch, capsys):
    def broken(cfg, alpha):
        raise VerificationFailure("mismatch", {"config": list(cfg.as_tuple()), "alpha": str(alpha), "status": "fail"})

    monkeypatch.setattr("src.services.verification_service.verify_inner_equals_outer", broken)
    assert cli("verify", "--max-antennas", "2", "--alpha-grid", "1", "--workers", "1") == EXIT_VERIFICATION
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"]
    assert summary["passed"] == 0


def test_rank_oracle_small_sweep(cli, capsys):
    assert cli("oracle", "rank", "--max-antennas", "2", "--max-m2", "3", "--alpha-grid", "0:2:1/4") == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["checked"] == 2 * 3 * 2 * 2 * 9
    assert summary["failures"] == []


def test_validate_named_term(cli, capsys):
    code = cli("validate", "--config", "2,2,3,2", "--alpha", "1.4", "--term", "rc_r1",
               "--crn", "--samples", "50", "--seed", "3", "--method", "qr")
    data = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert data["prediction"] == "14/5"
    assert data["common_random_numbers"] is True
    assert data["within_tolerance"] is True


def test_validate_fterm_csv(cli, capsys):
    code = cli("validate", "--fterm", "1,1,1,0,0", "--crn", "--samples", "50", "--format", "csv")
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "log2_rho,mean_rate,stderr"
    assert len(lines) == 8


def test_validate_unknown_term(cli, capsys):
    assert cli("validate", "--config", "1,2,1,1", "--alpha", "0.4", "--term", "rc") == EXIT_USAGE
    assert "--term" in capsys.readouterr().err


def test_validate_rejects_small_sample_counts(cli, capsys):
    assert cli("validate", "--fterm", "1,1,1,0,0", "--samples", "10") == EXIT_USAGE
    assert "--samples" in capsys.readouterr().err


def test_validate_rejects_a_short_ladder(cli, capsys):
    assert cli("validate", "--fterm", "1,1,1,0,0", "--ladder", "20,30,40") == EXIT_USAGE
    assert "--ladder" in capsys.readouterr().err


def test_plot_is_deterministic(cli, tmp_path):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    for target in (first, second):
        assert cli("plot", "--config", "1,2,1,1", "--alpha-grid", "0,1/2,1", "--csit", "delayed,perfect",
                   "-o", str(target)) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text(encoding="utf-8").count("<polygon") == 6


def test_plot_sum_series(cli, capsys):
    assert cli("plot", "--config", "2,2,3,2", "--alpha-grid", "0:2:1/4", "--kind", "sum",
               "--csit", "tin,delayed,perfect", "--title", "Sum <GDoF>") == EXIT_OK
    svg = capsys.readouterr().out
    assert svg.count("<polyline") == 3
    assert "Sum &lt;GDoF&gt;" in svg
