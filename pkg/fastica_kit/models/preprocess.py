# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Centering and whitening of signal matrices
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from fastica_kit.utils.errors import DegenerateInputError

logger = logging.getLogger(__name__)

# Eigenvalues below this fraction of the largest one count as rank deficiency
RELATIVE_EIGENVALUE_FLOOR = 1e-10


def as_signal_matrix(x, name: str = "signal") -> np.ndarray:
    """Coerce input to a finite float64 channels x samples matrix.

    A 1-D input is treated as a single channel.
    """
    matrix = np.asarray(x, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2:
        raise ValueError(f"{name} must be a 2-D channels x samples matrix, got {matrix.ndim}-D")
    if matrix.size == 0:
        raise ValueError(f"{name} is empty")
    if not np.all(np.isfinite(matrix)):
        raise ValueError(f"{name} contains non-finite values")
    return matrix


@dataclass(frozen=True)
class WhiteningModel:
    """Mean vector plus whitening matrix V and its inverse"""

    mean: np.ndarray
    whitener: np.ndarray
    dewhitener: np.ndarray
    eigenvalues: np.ndarray

    def transform(self, x: np.ndarray) -> np.ndarray:
        """Center and whiten new data with the fitted statistics"""
        x = as_signal_matrix(x)
        return self.whitener @ (x - self.mean[:, None])

    def inverse_transform(self, z: np.ndarray) -> np.ndarray:
        """Map whitened data back to the original (uncentered) space"""
        z = as_signal_matrix(z)
        return self.dewhitener @ z + self.mean[:, None]


def center(x) -> Tuple[np.ndarray, np.ndarray]:
    """Subtract the per-row mean.

    Returns:
        (centered matrix, vector of subtracted means)
    """
    x = as_signal_matrix(x)
    mean = x.mean(axis=1)
    return x - mean[:, None], mean


def sample_covariance(x) -> np.ndarray:
    """(1/N) X X^T of an already centered matrix"""
    x = as_signal_matrix(x)
    n_samples = x.shape[1]
    if n_samples < 2:
        raise ValueError(f"Sample covariance needs at least 2 samples, got {n_samples}")
    cov = (x @ x.T) / n_samples
    # Exact symmetry for eigh
    return 0.5 * (cov + cov.T)


def _fix_signs(eigenvectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude entry of every eigenvector positive"""
    fixed = eigenvectors.copy()
    for j in range(fixed.shape[1]):
        # argmax returns the first maximum, so ties go to the lowest index
        pivot = int(np.argmax(np.abs(fixed[:, j])))
        if fixed[pivot, j] < 0:
            fixed[:, j] = -fixed[:, j]
    return fixed


def whiten(x) -> Tuple[np.ndarray, WhiteningModel]:
    """Center x and transform it to identity sample covariance.

    The whitener is D^(-1/2) E^T where E D E^T is the eigendecomposition of the
    sample covariance, eigenvalues sorted in descending order.

    Returns:
        (whitened data z, fitted WhiteningModel)

    Raises:
        DegenerateInputError: if the covariance is rank deficient
    """
    x = as_signal_matrix(x)
    channels, n_samples = x.shape
    if n_samples < channels:
        raise ValueError(
            f"Whitening needs at least as many samples as channels ({n_samples} < {channels})"
        )

    centered, mean = center(x)
    cov = sample_covariance(centered)

    eigenvalues, eigenvectors = np.linalg.eigh(cov)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = eigenvalues[order]
    eigenvectors = _fix_signs(eigenvectors[:, order])

    largest = eigenvalues[0]
    if largest <= 0:
        raise DegenerateInputError(
            "Covariance is zero: input has no variance", index=0, eigenvalue=float(largest)
        )
    for index, value in enumerate(eigenvalues):
        if value <= RELATIVE_EIGENVALUE_FLOOR * largest:
            raise DegenerateInputError(
                f"Covariance is rank deficient: eigenvalue {index} is {value:.3e} "
                f"(largest {largest:.3e})",
                index=index,
                eigenvalue=float(value),
            )

    logger.debug(f"Whitening eigenvalues: {eigenvalues}")

    scale = np.sqrt(eigenvalues)
    whitener = eigenvectors.T / scale[:, None]
    dewhitener = eigenvectors * scale[None, :]

    model = WhiteningModel(
        mean=mean,
        whitener=whitener,
        dewhitener=dewhitener,
        eigenvalues=eigenvalues,
    )
    return whitener @ centered, model
