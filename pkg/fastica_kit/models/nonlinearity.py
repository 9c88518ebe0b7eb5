# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Contrast functions G, nonlinearities g = G' and their derivatives g'
import math
from enum import Enum
from typing import Callable, Dict, NamedTuple, Union

import numpy as np

from fastica_kit.utils.errors import DomainError

ArrayLike = Union[float, np.ndarray]

_LOG_2 = math.log(2.0)


class NonlinearityKind(str, Enum):
    """The four supported nonlinearities, addressed by their lowercase names"""

    TANH = "tanh"
    GAUSS = "gauss"
    POW3 = "pow3"
    SIN = "sin"

    @classmethod
    def parse(cls, value: Union[str, "NonlinearityKind"]) -> "NonlinearityKind":
        """Parse one of "tanh", "gauss", "pow3", "sin"; anything else is rejected"""
        if isinstance(value, NonlinearityKind):
            return value
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(kind.value for kind in cls)
            raise ValueError(f"Unknown nonlinearity '{value}' (expected one of: {names})") from None


class _Functions(NamedTuple):
    contrast: Callable[[np.ndarray], np.ndarray]
    score: Callable[[np.ndarray], np.ndarray]
    score_derivative: Callable[[np.ndarray], np.ndarray]


def _log_cosh(u: np.ndarray) -> np.ndarray:
    # log(cosh(u)) = log(e^u + e^-u) - log 2, without overflow for large |u|
    return np.logaddexp(u, -u) - _LOG_2


def _tanh_derivative(u: np.ndarray) -> np.ndarray:
    t = np.tanh(u)
    return 1.0 - t * t


def _gauss_contrast(u: np.ndarray) -> np.ndarray:
    return -np.exp(-0.5 * u * u)


def _gauss_score(u: np.ndarray) -> np.ndarray:
    return u * np.exp(-0.5 * u * u)


def _gauss_derivative(u: np.ndarray) -> np.ndarray:
    u2 = u * u
    return (1.0 - u2) * np.exp(-0.5 * u2)


def _pow3_contrast(u: np.ndarray) -> np.ndarray:
    return u ** 4 / 4.0


def _pow3_score(u: np.ndarray) -> np.ndarray:
    return u ** 3


def _pow3_derivative(u: np.ndarray) -> np.ndarray:
    return 3.0 * u * u


def _sin_contrast(u: np.ndarray) -> np.ndarray:
    # G4 = -cos is the even, bounded antiderivative of g4 = sin
    return -np.cos(u)


FUNCTIONS: Dict[NonlinearityKind, _Functions] = {
    NonlinearityKind.TANH: _Functions(_log_cosh, np.tanh, _tanh_derivative),
    NonlinearityKind.GAUSS: _Functions(_gauss_contrast, _gauss_score, _gauss_derivative),
    NonlinearityKind.POW3: _Functions(_pow3_contrast, _pow3_score, _pow3_derivative),
    NonlinearityKind.SIN: _Functions(_sin_contrast, np.sin, np.cos),
}

# E[G(v)] for v ~ N(0, 1).
#   tanh:  integral of log cosh(v) phi(v) dv, evaluated once by quadrature
#   gauss: E[-exp(-v^2/2)] = -1/sqrt(2)
#   pow3:  E[v^4]/4 = 3/4
#   sin:   E[-cos(v)] = -exp(-1/2) (real part of the characteristic function)
GAUSSIAN_EXPECTATIONS: Dict[NonlinearityKind, float] = {
    NonlinearityKind.TANH: 0.3745672075,
    NonlinearityKind.GAUSS: -1.0 / math.sqrt(2.0),
    NonlinearityKind.POW3: 0.75,
    NonlinearityKind.SIN: -math.exp(-0.5),
}


def _evaluate(kind: NonlinearityKind, u: ArrayLike, which: str) -> ArrayLike:
    kind = NonlinearityKind.parse(kind)
    values = np.asarray(u, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"{which}({kind.value}) requires finite input")
    result = getattr(FUNCTIONS[kind], which)(values)
    if np.ndim(u) == 0:
        return float(result)
    return result


def contrast(kind: NonlinearityKind, u: ArrayLike) -> ArrayLike:
    """Contrast function G(u); accepts a scalar or an array"""
    return _evaluate(kind, u, "contrast")


def score(kind: NonlinearityKind, u: ArrayLike) -> ArrayLike:
    """Nonlinearity g(u) = G'(u); accepts a scalar or an array"""
    return _evaluate(kind, u, "score")


def score_derivative(kind: NonlinearityKind, u: ArrayLike) -> ArrayLike:
    """Derivative g'(u) used in the fixed-point update"""
    return _evaluate(kind, u, "score_derivative")


def gaussian_expectation(kind: NonlinearityKind) -> float:
    """E[G(v)] for a standard normal v"""
    return GAUSSIAN_EXPECTATIONS[NonlinearityKind.parse(kind)]
