# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Repeated-run benchmark: C-ave and T-ave per nonlinearity
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field
from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn

from fastica_kit.core.ingest import load_signals
from fastica_kit.generators.mixing import mix
from fastica_kit.models.fastica import FastIcaConfig, run
from fastica_kit.models.nonlinearity import NonlinearityKind
from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.parsers.csv_parser import read_csv_matrix
from fastica_kit.utils.config import get_benchmark_config, get_fastica_config
from fastica_kit.utils.errors import FastICAKitError
from fastica_kit.utils.format_converter import save_report
from fastica_kit.utils.metrics import match_sources

logger = logging.getLogger(__name__)


class BenchmarkRow(BaseModel):
    nonlinearity: NonlinearityKind
    c_ave: float
    t_ave_seconds: float
    mean_iterations: float
    convergence_rate: float = Field(ge=0.0, le=1.0)


class BenchmarkReport(BaseModel):
    """One row per requested nonlinearity, each averaged over `repeats` runs"""

    rows: List[BenchmarkRow]
    repeats: int = Field(ge=1)
    experiment_label: str


class RepeatOutcome(NamedTuple):
    c_ave: float
    elapsed_seconds: float
    mean_iterations: float
    converged: bool


def _run_once(
    sources: np.ndarray, mixed: np.ndarray, config: FastIcaConfig
) -> RepeatOutcome:
    start = time.perf_counter()
    try:
        result = run(mixed, config)
        c_ave = match_sources(sources, result.estimates).c_ave
    except (FastICAKitError, ValueError, ArithmeticError) as e:
        elapsed = time.perf_counter() - start
        logger.warning(
            f"Repeat with seed {config.seed} ({config.nonlinearity.value}) failed: {e}"
        )
        return RepeatOutcome(0.0, elapsed, float(config.max_iterations), False)
    return RepeatOutcome(
        c_ave,
        result.elapsed_seconds,
        float(np.mean(result.iterations)),
        result.all_converged,
    )


def benchmark(
    sources,
    a,
    kinds: Sequence[NonlinearityKind],
    repeats: int,
    base_seed: int = 0,
    epsilon: float = 1e-6,
    max_iterations: int = 1000,
    max_restarts: int = 5,
    workers: int = 1,
    label: str = "synthetic",
    verbose: bool = False,
) -> BenchmarkReport:
    """Mix the sources with A, then separate `repeats` times per nonlinearity.

    Repeat r uses seed base_seed + r. A failed repeat counts as non-converged with
    c_ave 0 instead of aborting the report.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    sources = as_signal_matrix(sources, "sources")
    mixed = mix(sources, a)
    kinds = [NonlinearityKind.parse(kind) for kind in kinds]

    rows: List[BenchmarkRow] = []
    with Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("({task.completed}/{task.total})"),
        TimeElapsedColumn(),
        disable=not verbose,
    ) as progress, ThreadPoolExecutor(max_workers=workers) as pool:
        for kind in kinds:
            task = progress.add_task(f"Benchmarking '{kind.value}'", total=repeats)
            configs = [
                FastIcaConfig(
                    components=sources.shape[0],
                    nonlinearity=kind,
                    epsilon=epsilon,
                    max_iterations=max_iterations,
                    seed=base_seed + r,
                    max_restarts=max_restarts,
                )
                for r in range(repeats)
            ]

            outcomes: List[RepeatOutcome] = []
            # map preserves submission order, so rows are reproducible
            for outcome in pool.map(lambda cfg: _run_once(sources, mixed, cfg), configs):
                outcomes.append(outcome)
                progress.update(task, advance=1)

            row = BenchmarkRow(
                nonlinearity=kind,
                c_ave=float(np.mean([o.c_ave for o in outcomes])),
                t_ave_seconds=float(np.mean([o.elapsed_seconds for o in outcomes])),
                mean_iterations=float(np.mean([o.mean_iterations for o in outcomes])),
                convergence_rate=sum(o.converged for o in outcomes) / repeats,
            )
            logger.info(
                f"{kind.value}: C-ave {row.c_ave:.4f}, T-ave {row.t_ave_seconds:.4f}s, "
                f"{row.mean_iterations:.1f} iterations, converged {row.convergence_rate:.0%}"
            )
            rows.append(row)

    return BenchmarkReport(rows=rows, repeats=repeats, experiment_label=label)


def benchmark_files(
    source_paths: Sequence[str],
    matrix_path: str,
    output_path: str,
    kinds: Optional[Sequence[str]] = None,
    repeats: Optional[int] = None,
    base_seed: Optional[int] = None,
    epsilon: Optional[float] = None,
    max_iterations: Optional[int] = None,
    workers: Optional[int] = None,
    label: Optional[str] = None,
    config: Optional[Dict[str, Any]] = None,
    verbose: bool = False,
) -> BenchmarkReport:
    """Run the benchmark over sources/A files and save the report (.csv or .json).

    Unset arguments fall back to the benchmark and fastica config sections.
    """
    config = config or {}
    bench_config = get_benchmark_config(config)
    fastica_config = get_fastica_config(config)

    def pick(value: Any, section: Dict[str, Any], key: str, fallback: Any) -> Any:
        return value if value is not None else section.get(key, fallback)

    report = benchmark(
        load_signals(source_paths).matrix,
        read_csv_matrix(matrix_path),
        pick(kinds, bench_config, "nonlinearities", ["tanh", "gauss", "pow3", "sin"]),
        pick(repeats, bench_config, "repeats", 10),
        base_seed=pick(base_seed, fastica_config, "seed", 0),
        epsilon=pick(epsilon, fastica_config, "epsilon", 1e-6),
        max_iterations=pick(max_iterations, fastica_config, "max_iterations", 1000),
        max_restarts=fastica_config.get("max_restarts", 5),
        workers=pick(workers, bench_config, "workers", 1),
        label=pick(label, bench_config, "label", "synthetic"),
        verbose=verbose,
    )
    save_report(report, output_path)
    return report
