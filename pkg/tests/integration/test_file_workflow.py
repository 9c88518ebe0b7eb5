"""Integration tests for the gen -> mix -> separate file workflow."""

import json
import os

import numpy as np
import pytest

from fastica_kit.core.generate import generate_sources_file, mix_sources_file, resolve_mixing_matrix
from fastica_kit.core.ingest import rescale_to_unit_interval
from fastica_kit.core.separate import build_fastica_config, process_file
from fastica_kit.parsers.csv_parser import read_csv_matrix
from fastica_kit.parsers.pgm_parser import ImageBuffer, write_pgm
from fastica_kit.parsers.wav_parser import read_wav
from tests.utils import CANONICAL_SAMPLES, CANONICAL_SOURCE_SPECS


@pytest.mark.integration
def test_csv_workflow(temp_env, mock_config):
    """Test sources, mixtures and estimates through CSV files with a JSON report."""
    sources = generate_sources_file(
        CANONICAL_SOURCE_SPECS, CANONICAL_SAMPLES, temp_env.file("sources.csv"), mock_config
    )
    mixed, a = mix_sources_file(
        [sources],
        temp_env.file("mixed.csv"),
        reference_matrix=True,
        save_matrix_path=temp_env.file("A.csv"),
        config=mock_config,
    )
    np.testing.assert_array_equal(read_csv_matrix(temp_env.file("A.csv")), a)

    config = build_fastica_config(mock_config, 3, nonlinearity="pow3")
    summary = process_file(
        [mixed],
        temp_env.file("estimates.csv"),
        config,
        config=mock_config,
        sources_path=[sources],
        report_path=temp_env.file("report.json"),
    )

    assert read_csv_matrix(temp_env.file("estimates.csv")).shape == (3, CANONICAL_SAMPLES)
    with open(temp_env.file("report.json")) as f:
        report = json.load(f)
    assert report == json.loads(json.dumps(summary))
    assert report["nonlinearity"] == "pow3"
    assert len(report["iterations"]) == 3
    assert all(value >= 0 for value in report["negentropy"])
    assert report["match"]["c_ave"] >= 0.98


@pytest.mark.integration
def test_wav_workflow(temp_env, mock_config):
    """Test peak-normalized 16-bit WAV files keep the separation quality."""
    sources = generate_sources_file(
        CANONICAL_SOURCE_SPECS, CANONICAL_SAMPLES, temp_env.file("sources.wav"), mock_config
    )
    audio = read_wav(sources)
    assert audio.sample_rate == 44100
    assert np.max(np.abs(audio.signal)) == pytest.approx(0.99, abs=1 / 32768)

    mixed, _ = mix_sources_file([sources], temp_env.file("mixed.wav"), seed=3, config=mock_config)
    summary = process_file(
        [mixed],
        temp_env.file("estimates.wav"),
        build_fastica_config(mock_config, 3),
        config=mock_config,
        sources_path=[sources],
    )

    assert read_wav(temp_env.file("estimates.wav")).signal.shape == (3, CANONICAL_SAMPLES)
    assert summary["match"]["c_ave"] >= 0.98


@pytest.mark.integration
def test_pgm_workflow(temp_env, mock_config, canonical_sources):
    """Test one image per file in and out of the separation."""
    source_paths = []
    for index, row in enumerate(rescale_to_unit_interval(canonical_sources)):
        path = temp_env.file(f"image_{index}.pgm")
        write_pgm(path, ImageBuffer(signal=row, width=100, height=100))
        source_paths.append(path)

    mix_sources_file(source_paths, temp_env.file("mixed.pgm"), reference_matrix=True, config=mock_config)
    mixed_paths = [temp_env.file(f"mixed_{i}.pgm") for i in range(3)]
    assert all(os.path.exists(p) for p in mixed_paths)

    summary = process_file(
        mixed_paths,
        temp_env.file("estimate.pgm"),
        build_fastica_config(mock_config, 3, nonlinearity="tanh"),
        config=mock_config,
        sources_path=source_paths,
    )

    assert [os.path.basename(p) for p in summary["outputs"]] == [
        "estimate_0.pgm",
        "estimate_1.pgm",
        "estimate_2.pgm",
    ]
    assert summary["match"]["c_ave"] >= 0.95


@pytest.mark.integration
def test_mixing_matrix_choice_is_exclusive(temp_env):
    """Test that exactly one mixing matrix source must be chosen."""
    with pytest.raises(ValueError, match="exactly one"):
        resolve_mixing_matrix(3)
    with pytest.raises(ValueError, match="exactly one"):
        resolve_mixing_matrix(3, seed=1, reference_matrix=True)
    assert resolve_mixing_matrix(4, seed=2).shape == (4, 4)


@pytest.mark.integration
def test_build_fastica_config_precedence(mock_config):
    """Test explicit argument > config file > default."""
    mock_config["fastica"]["nonlinearity"] = "gauss"
    mock_config["fastica"]["epsilon"] = 1e-5

    from_config = build_fastica_config(mock_config, 2)
    assert from_config.nonlinearity.value == "gauss"
    assert from_config.epsilon == 1e-5

    explicit = build_fastica_config(mock_config, 2, nonlinearity="sin", epsilon=1e-7, seed=9)
    assert (explicit.nonlinearity.value, explicit.epsilon, explicit.seed) == ("sin", 1e-7, 9)

    defaults = build_fastica_config({}, 2)
    assert defaults.max_iterations == 1000
