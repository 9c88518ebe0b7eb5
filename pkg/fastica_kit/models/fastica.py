# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Deflationary fixed-point FastICA
import logging
import time
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from fastica_kit.models.nonlinearity import (
    FUNCTIONS,
    NonlinearityKind,
    contrast,
    gaussian_expectation,
)
from fastica_kit.models.preprocess import WhiteningModel, as_signal_matrix, whiten
from fastica_kit.utils.errors import DegenerateProjectionError, ExtractionError

logger = logging.getLogger(__name__)

# Deflation residuals at or below this norm cannot be renormalized
DEGENERATE_RESIDUAL = 1e-12

VectorList = Union[np.ndarray, Sequence[np.ndarray]]


class FastIcaConfig(BaseModel):
    """Solver settings for one separation run"""

    model_config = ConfigDict(frozen=True)

    components: int = Field(ge=1)
    nonlinearity: NonlinearityKind = NonlinearityKind.SIN
    epsilon: float = Field(default=1e-6, gt=0.0, lt=1.0)
    max_iterations: int = Field(default=1000, ge=1)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    max_restarts: int = Field(default=5, ge=0)


class ComponentFit(NamedTuple):
    """Outcome of extracting one component"""

    w: np.ndarray
    iterations: int
    converged: bool
    initial: np.ndarray


@dataclass(frozen=True)
class SeparationResult:
    """Separation matrix W (rows in extraction order) and the estimates Y = W Z"""

    w: np.ndarray
    estimates: np.ndarray
    iterations: np.ndarray
    converged: np.ndarray
    elapsed_seconds: float
    whitening: WhiteningModel
    initial_w: np.ndarray

    @property
    def all_converged(self) -> bool:
        return bool(np.all(self.converged))

    @property
    def unmixing_matrix(self) -> np.ndarray:
        """W V: maps centered mixtures straight to the estimates"""
        return self.w @ self.whitening.whitener

    @property
    def mixing_estimate(self) -> np.ndarray:
        """V^-1 W^T: estimate of the mixing matrix up to permutation and scale"""
        return self.whitening.dewhitener @ self.w.T


def _previous_matrix(previous: VectorList, dimension: int) -> np.ndarray:
    if isinstance(previous, np.ndarray):
        return previous.reshape(-1, dimension)
    if len(previous) == 0:
        return np.zeros((0, dimension))
    return np.vstack([np.asarray(v, dtype=np.float64).reshape(1, -1) for v in previous])


def _random_unit_vector(rng: np.random.Generator, dimension: int) -> np.ndarray:
    while True:
        w = rng.uniform(-1.0, 1.0, size=dimension)
        norm = np.linalg.norm(w)
        if norm > DEGENERATE_RESIDUAL:
            return w / norm


def _fixed_point_step(z: np.ndarray, w: np.ndarray, kind: NonlinearityKind) -> np.ndarray:
    functions = FUNCTIONS[kind]
    projection = w @ z
    return (z @ functions.score(projection)) / z.shape[1] - functions.score_derivative(
        projection
    ).mean() * w


def one_unit_update(z, w, kind: NonlinearityKind) -> np.ndarray:
    """Un-normalized fixed-point step w+ = E{z g(w^T z)} - E{g'(w^T z)} w"""
    z = as_signal_matrix(z, "z")
    w = np.asarray(w, dtype=np.float64).ravel()
    if w.shape[0] != z.shape[0]:
        raise ValueError(f"Weight vector has length {w.shape[0]}, data has {z.shape[0]} channels")
    return _fixed_point_step(z, w, NonlinearityKind.parse(kind))


def deflate(w, previous: VectorList) -> np.ndarray:
    """Gram-Schmidt w against the already extracted vectors, then renormalize.

    Two projection passes keep the result orthogonal when w starts close to the span.

    Raises:
        DegenerateProjectionError: if w lies (numerically) in their span
    """
    w = np.asarray(w, dtype=np.float64).ravel().copy()
    basis = _previous_matrix(previous, w.shape[0])
    for _ in range(2):
        w -= basis.T @ (basis @ w)
    norm = float(np.linalg.norm(w))
    if norm <= DEGENERATE_RESIDUAL:
        raise DegenerateProjectionError(
            f"Deflation residual norm {norm:.3e} is too small to renormalize", norm
        )
    return w / norm


def extract_component(
    z,
    previous: VectorList,
    config: FastIcaConfig,
    rng: np.random.Generator,
) -> ComponentFit:
    """Iterate update -> deflate -> normalize until 1 - |<w_new, w_old>| < epsilon.

    Raises:
        ExtractionError: after more than config.max_restarts degenerate deflations
    """
    z = as_signal_matrix(z, "z")
    dimension = z.shape[0]
    basis = _previous_matrix(previous, dimension)
    index = basis.shape[0]
    if index >= dimension:
        raise ValueError(f"Cannot extract component {index} from {dimension}-channel data")

    restarts = 0

    def restart(reason: DegenerateProjectionError) -> None:
        nonlocal restarts
        restarts += 1
        if restarts > config.max_restarts:
            raise ExtractionError(
                f"Component {index}: deflation degenerated {restarts} times, giving up",
                component=index,
            ) from reason
        logger.warning(f"Component {index}: {reason}; re-randomizing (attempt {restarts})")

    def fresh_start() -> np.ndarray:
        while True:
            try:
                return deflate(_random_unit_vector(rng, dimension), basis)
            except DegenerateProjectionError as e:
                restart(e)

    w = fresh_start()
    initial = w.copy()

    for iteration in range(1, config.max_iterations + 1):
        w_new = _fixed_point_step(z, w, config.nonlinearity)
        try:
            w_new = deflate(w_new, basis)
        except DegenerateProjectionError as e:
            restart(e)
            w = fresh_start()
            initial = w.copy()
            continue

        distance = 1.0 - abs(float(w_new @ w))
        logger.debug(f"Component {index}, iteration {iteration}: distance {distance:.3e}")
        w = w_new
        if distance < config.epsilon:
            logger.info(f"Component {index} converged after {iteration} iterations")
            return ComponentFit(w, iteration, True, initial)

    logger.warning(
        f"Component {index} did not converge within {config.max_iterations} iterations"
    )
    return ComponentFit(w, config.max_iterations, False, initial)


def run(x_mixed, config: FastIcaConfig) -> SeparationResult:
    """Center, whiten and extract config.components components by deflation"""
    x_mixed = as_signal_matrix(x_mixed, "x_mixed")
    if x_mixed.shape[0] != config.components:
        raise ValueError(
            f"Mixture has {x_mixed.shape[0]} channels but {config.components} components "
            "were requested"
        )

    rng = np.random.default_rng(config.seed)
    start = time.perf_counter()

    z, model = whiten(x_mixed)

    fits: List[ComponentFit] = []
    for _ in range(config.components):
        fits.append(extract_component(z, [fit.w for fit in fits], config, rng))

    w = np.vstack([fit.w for fit in fits])
    estimates = w @ z
    elapsed = time.perf_counter() - start

    return SeparationResult(
        w=w,
        estimates=estimates,
        iterations=np.array([fit.iterations for fit in fits], dtype=np.int64),
        converged=np.array([fit.converged for fit in fits], dtype=bool),
        elapsed_seconds=elapsed,
        whitening=model,
        initial_w=np.vstack([fit.initial for fit in fits]),
    )


def negentropy_objective(w, z, kind: NonlinearityKind) -> float:
    """J_G(w) = (E[G(w^T z)] - E[G(v)])^2"""
    z = as_signal_matrix(z, "z")
    w = np.asarray(w, dtype=np.float64).ravel()
    if w.shape[0] != z.shape[0]:
        raise ValueError(f"Weight vector has length {w.shape[0]}, data has {z.shape[0]} channels")
    difference = float(np.mean(contrast(kind, w @ z))) - gaussian_expectation(kind)
    return difference * difference


def component_objectives(result: SeparationResult, kind: NonlinearityKind) -> List[float]:
    """Negentropy objective of every extracted component.

    Each estimate row already is w^T z, so it is scored as 1-D data with w = [1].
    """
    unit = np.ones(1)
    return [negentropy_objective(unit, row, kind) for row in result.estimates]
