"""Unit tests for report format converters."""

import csv
import json

import pytest

from fastica_kit.core.benchmark import BenchmarkReport, BenchmarkRow
from fastica_kit.models.nonlinearity import NonlinearityKind
from fastica_kit.utils.format_converter import REPORT_COLUMNS, save_report, to_csv, to_json


def _report():
    return BenchmarkReport(
        rows=[
            BenchmarkRow(
                nonlinearity=NonlinearityKind.TANH,
                c_ave=0.9991,
                t_ave_seconds=0.0123,
                mean_iterations=7.5,
                convergence_rate=1.0,
            ),
            BenchmarkRow(
                nonlinearity=NonlinearityKind.SIN,
                c_ave=0.998,
                t_ave_seconds=0.01,
                mean_iterations=6.0,
                convergence_rate=0.9,
            ),
        ],
        repeats=10,
        experiment_label="synthetic",
    )


@pytest.mark.unit
def test_to_csv_columns_and_rows(temp_env):
    """Test the fixed column order and one row per nonlinearity."""
    path = to_csv(_report(), temp_env.file("report.csv"))

    with open(path, newline="") as f:
        rows = list(csv.reader(f))

    assert rows[0] == REPORT_COLUMNS
    assert rows[0] == ["nonlinearity", "c_ave", "t_ave_seconds", "mean_iterations", "convergence_rate"]
    assert [r[0] for r in rows[1:]] == ["tanh", "sin"]
    assert float(rows[1][1]) == 0.9991
    assert float(rows[2][4]) == 0.9


@pytest.mark.unit
def test_to_json_mirrors_report_fields(temp_env):
    """Test that JSON output has the report fields and lowercase kind names."""
    path = to_json(_report(), temp_env.file("nested/report.json"))

    with open(path) as f:
        data = json.load(f)

    assert data["repeats"] == 10
    assert data["experiment_label"] == "synthetic"
    assert data["rows"][1]["nonlinearity"] == "sin"
    assert BenchmarkReport.model_validate(data) == _report()


@pytest.mark.unit
def test_to_json_accepts_plain_dicts(temp_env):
    """Test that run summaries (plain dicts) are written unchanged."""
    path = to_json({"iterations": [3, 4]}, temp_env.file("summary.json"))
    with open(path) as f:
        assert json.load(f) == {"iterations": [3, 4]}


@pytest.mark.unit
def test_save_report_dispatches_on_extension(temp_env):
    """Test .csv, .json and an unknown extension."""
    assert save_report(_report(), temp_env.file("r.csv")).endswith(".csv")
    assert save_report(_report(), temp_env.file("r.json")).endswith(".json")
    with pytest.raises(ValueError, match="Unknown report format"):
        save_report(_report(), temp_env.file("r.xlsx"))
