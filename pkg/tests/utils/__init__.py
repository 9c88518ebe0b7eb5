"""Test utilities package for fastica-kit tests."""

from .test_helpers import (
    TestFileFactory,
    CLITestHelper,
    MockConfigHelper,
    TempDirectoryManager,
    CANONICAL_SOURCE_SPECS,
    CANONICAL_SAMPLES,
)

__all__ = [
    'TestFileFactory',
    'CLITestHelper',
    'MockConfigHelper',
    'TempDirectoryManager',
    'CANONICAL_SOURCE_SPECS',
    'CANONICAL_SAMPLES',
]
