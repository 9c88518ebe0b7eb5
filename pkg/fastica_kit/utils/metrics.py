# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Correlation-coefficient performance index and source matching
from typing import List

import numpy as np
from pydantic import BaseModel
from scipy.optimize import linear_sum_assignment

from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.utils.errors import DegenerateInputError

_EPS = np.finfo(np.float64).eps


class MatchReport(BaseModel):
    """Result of pairing every true source with one estimate.

    assignment[i] is the estimate index matched to source i.
    """

    assignment: List[int]
    signs: List[int]
    pair_correlations: List[float]
    c_ave: float


def _centered(x: np.ndarray, what: str, channel: int = 0) -> np.ndarray:
    centered = x - x.mean()
    # Anything below rounding noise of the values themselves counts as constant
    floor = (_EPS * float(np.max(np.abs(x)))) ** 2 * x.size
    if float(centered @ centered) <= floor:
        raise DegenerateInputError(f"{what} has zero variance", channel=channel)
    return centered


def correlation(x, y) -> float:
    """C(x, y) = cov(x, y) / (sqrt(cov(x, x)) sqrt(cov(y, y)))"""
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape[0] != y.shape[0]:
        raise ValueError(f"Length mismatch: {x.shape[0]} vs {y.shape[0]}")
    if x.shape[0] < 2:
        raise ValueError("Correlation needs at least 2 samples")
    xc = _centered(x, "x")
    yc = _centered(y, "y")
    value = float(xc @ yc) / (np.sqrt(float(xc @ xc)) * np.sqrt(float(yc @ yc)))
    return float(np.clip(value, -1.0, 1.0))


def correlation_matrix(sources, estimates) -> np.ndarray:
    """Signed C between every source row (rows) and estimate row (columns)"""
    sources = as_signal_matrix(sources, "sources")
    estimates = as_signal_matrix(estimates, "estimates")
    if sources.shape != estimates.shape:
        raise ValueError(
            f"Sources {sources.shape} and estimates {estimates.shape} must have the same shape"
        )
    if sources.shape[1] < 2:
        raise ValueError("Correlation needs at least 2 samples")

    def normalized_rows(matrix: np.ndarray, what: str) -> np.ndarray:
        rows = []
        for channel, row in enumerate(matrix):
            centered = _centered(row, f"{what} channel {channel}", channel)
            rows.append(centered / np.sqrt(float(centered @ centered)))
        return np.vstack(rows)

    return np.clip(
        normalized_rows(sources, "source") @ normalized_rows(estimates, "estimate").T, -1.0, 1.0
    )


def optimal_assignment(scores) -> np.ndarray:
    """Column assigned to every row so that the total score is maximal"""
    scores = np.asarray(scores, dtype=np.float64)
    rows, columns = linear_sum_assignment(scores, maximize=True)
    assignment = np.empty(scores.shape[0], dtype=np.int64)
    assignment[rows] = columns
    return assignment


def match_sources(sources, estimates) -> MatchReport:
    """Resolve the permutation and sign ambiguity and compute C-ave"""
    signed = correlation_matrix(sources, estimates)
    magnitude = np.abs(signed)
    assignment = optimal_assignment(magnitude)

    rows = np.arange(signed.shape[0])
    matched = signed[rows, assignment]
    pair_correlations = magnitude[rows, assignment]

    return MatchReport(
        assignment=[int(j) for j in assignment],
        signs=[-1 if value < 0 else 1 for value in matched],
        pair_correlations=[float(c) for c in pair_correlations],
        c_ave=float(np.mean(pair_correlations)),
    )
