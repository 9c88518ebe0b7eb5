# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Linear instantaneous mixing x = A s
import logging

import numpy as np

from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.utils.errors import GenerationError

logger = logging.getLogger(__name__)

# Mixing matrices with |det| at or below this are treated as singular
SINGULAR_DETERMINANT = 1e-12

# Example 3x3 mixing matrix used throughout the benchmark experiments
REFERENCE_MIXING_MATRIX = np.array(
    [
        [0.1946, 0.8345, 0.1477],
        [0.2252, 0.7008, 0.2098],
        [0.0967, 0.8110, 0.7473],
    ]
)


def check_mixing_matrix(a) -> np.ndarray:
    """Validate that a is square and invertible"""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Mixing matrix must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("Mixing matrix contains non-finite values")
    determinant = float(np.linalg.det(a))
    if abs(determinant) <= SINGULAR_DETERMINANT:
        raise ValueError(f"Mixing matrix is singular (det = {determinant:.3e})")
    return a


def mix(sources, a) -> np.ndarray:
    """Return A S"""
    sources = as_signal_matrix(sources, "sources")
    a = check_mixing_matrix(a)
    if a.shape[1] != sources.shape[0]:
        raise ValueError(
            f"Mixing matrix is {a.shape[0]}x{a.shape[1]} but there are {sources.shape[0]} sources"
        )
    return a @ sources


def random_mixing_matrix(
    m: int,
    seed: int,
    min_abs_determinant: float = 0.01,
    max_attempts: int = 100,
) -> np.ndarray:
    """Draw an m x m matrix with entries uniform on [0, 1], redrawing until |det| is large enough.

    Raises:
        GenerationError: if max_attempts consecutive draws are near-singular
    """
    if m < 2:
        raise ValueError(f"Mixing matrix needs m >= 2, got {m}")
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        a = rng.uniform(0.0, 1.0, size=(m, m))
        determinant = float(np.linalg.det(a))
        if abs(determinant) > min_abs_determinant:
            logger.debug(f"Mixing matrix accepted on draw {attempt} (det = {determinant:.4f})")
            return a
    raise GenerationError(
        f"No {m}x{m} mixing matrix with |det| > {min_abs_determinant} in {max_attempts} draws"
    )
