# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Logic for the separate command
import logging
from typing import Any, Dict, List, Optional, Sequence

from fastica_kit.core.ingest import load_signals, save_signals
from fastica_kit.models.fastica import FastIcaConfig, SeparationResult, component_objectives, run
from fastica_kit.models.nonlinearity import NonlinearityKind
from fastica_kit.utils.config import get_fastica_config, get_io_config
from fastica_kit.utils.format_converter import to_json
from fastica_kit.utils.metrics import match_sources

logger = logging.getLogger(__name__)


def build_fastica_config(
    config: Dict[str, Any],
    components: int,
    nonlinearity: Optional[str] = None,
    epsilon: Optional[float] = None,
    max_iterations: Optional[int] = None,
    seed: Optional[int] = None,
) -> FastIcaConfig:
    """Solver settings with precedence: explicit argument > config file > default"""
    defaults = get_fastica_config(config)

    def pick(value: Any, key: str, fallback: Any) -> Any:
        return value if value is not None else defaults.get(key, fallback)

    return FastIcaConfig(
        components=components,
        nonlinearity=NonlinearityKind.parse(pick(nonlinearity, "nonlinearity", "sin")),
        epsilon=pick(epsilon, "epsilon", 1e-6),
        max_iterations=pick(max_iterations, "max_iterations", 1000),
        seed=pick(seed, "seed", 0),
        max_restarts=defaults.get("max_restarts", 5),
    )


def separation_summary(result: SeparationResult, config: FastIcaConfig) -> Dict[str, Any]:
    """JSON-ready description of one run"""
    return {
        "nonlinearity": config.nonlinearity.value,
        "components": config.components,
        "epsilon": config.epsilon,
        "max_iterations": config.max_iterations,
        "seed": config.seed,
        "iterations": [int(i) for i in result.iterations],
        "converged": [bool(c) for c in result.converged],
        "elapsed_seconds": result.elapsed_seconds,
        "negentropy": component_objectives(result, config.nonlinearity),
        "separation_matrix": result.w.tolist(),
        "mixing_estimate": result.mixing_estimate.tolist(),
    }


def process_file(
    input_paths: Sequence[str],
    output_path: str,
    fastica_config: FastIcaConfig,
    config: Optional[Dict[str, Any]] = None,
    sources_path: Optional[Sequence[str]] = None,
    report_path: Optional[str] = None,
) -> Dict[str, Any]:
    """Separate the mixtures in input_paths and write the estimates.

    Args:
        input_paths: One or more CSV/WAV/PGM files; their rows form the mixture
        output_path: Estimates destination; format follows the extension
        fastica_config: Solver settings
        config: Configuration dictionary
        sources_path: Optional ground-truth file(s) for scoring the estimates
        report_path: Optional JSON report destination

    Returns:
        The run summary (also written to report_path when given)
    """
    config = config or {}
    loaded = load_signals(input_paths)
    logger.info(
        f"Separating {loaded.matrix.shape[0]} channels x {loaded.matrix.shape[1]} samples "
        f"with '{fastica_config.nonlinearity.value}'"
    )
    result = run(loaded.matrix, fastica_config)

    io_config = get_io_config(config)
    written: List[str] = save_signals(
        result.estimates,
        output_path,
        sample_rate=loaded.sample_rate or io_config.get("sample_rate", 44100),
        image_size=loaded.image_size,
        wav_peak=io_config.get("wav_peak", 0.99),
    )

    summary = separation_summary(result, fastica_config)
    summary["outputs"] = written
    if sources_path:
        truth = load_signals(sources_path).matrix
        summary["match"] = match_sources(truth, result.estimates).model_dump()

    if report_path:
        to_json(summary, report_path)
    return summary
