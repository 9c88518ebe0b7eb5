"""Common pytest fixtures"""

from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest
from typer.testing import CliRunner

from fastica_kit.generators.mixing import REFERENCE_MIXING_MATRIX, mix
from fastica_kit.generators.source_generator import SourceSpec, gen_sources

# Import our test utilities
from tests.utils import (
    CANONICAL_SAMPLES,
    CANONICAL_SOURCE_SPECS,
    CLITestHelper,
    MockConfigHelper,
    TempDirectoryManager,
)


@pytest.fixture
def sample_data_path():
    """Fixture providing path to the sample data directory."""
    base_dir = Path(__file__).parent
    return str(base_dir / "data")


@pytest.fixture(scope="session")
def canonical_sources():
    """Sine (period 100), sawtooth (period 173) and uniform noise (seed 42), N = 10000."""
    specs = [SourceSpec.parse(text) for text in CANONICAL_SOURCE_SPECS]
    return gen_sources(specs, CANONICAL_SAMPLES)


@pytest.fixture(scope="session")
def mixing_matrix():
    """The built-in 3x3 example mixing matrix."""
    return REFERENCE_MIXING_MATRIX.copy()


@pytest.fixture(scope="session")
def canonical_mixture(canonical_sources, mixing_matrix):
    """Canonical sources mixed by the example matrix."""
    return mix(canonical_sources, mixing_matrix)


@pytest.fixture
def rng():
    """Seeded generator so randomized property tests are repeatable."""
    return np.random.default_rng(20240501)


@pytest.fixture
def config_factory():
    """Factory fixture for creating mock configurations."""
    return MockConfigHelper


@pytest.fixture
def mock_config(config_factory):
    """Default mock configuration."""
    return config_factory.create_default_config()


@pytest.fixture
def patch_config(config_factory):
    """Patch the config loader used by the CLI context to return a mock configuration."""
    with patch("fastica_kit.core.context.load_config") as mock_load_config:
        mock_load_config.return_value = config_factory.create_default_config()
        yield mock_load_config


@pytest.fixture
def cli_runner():
    """Fixture providing CLI runner for testing CLI commands."""
    return CliRunner()


@pytest.fixture
def cli_helper():
    """Fixture providing CLI test helper with common utilities."""
    from fastica_kit.cli import app
    return CLITestHelper(app)


@pytest.fixture
def temp_env():
    """Fixture providing temporary directory environment with cleanup."""
    with TempDirectoryManager() as temp_mgr:
        yield temp_mgr


@pytest.fixture
def canonical_files(canonical_sources, mixing_matrix):
    """Sources and the mixing matrix written as CSV files in a temporary directory."""
    with TempDirectoryManager() as temp_mgr:
        sources_path, matrix_path = temp_mgr.create_matrix_files({
            "sources.csv": canonical_sources,
            "A.csv": mixing_matrix,
        })
        yield temp_mgr, sources_path, matrix_path
