# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Logic for the gen and mix commands
import logging
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from fastica_kit.core.ingest import load_signals, save_signals
from fastica_kit.generators.mixing import REFERENCE_MIXING_MATRIX, mix, random_mixing_matrix
from fastica_kit.generators.source_generator import SourceSpec, gen_sources
from fastica_kit.parsers.csv_parser import read_csv_matrix, write_csv_matrix
from fastica_kit.utils.config import get_io_config, get_mixing_config

logger = logging.getLogger(__name__)


def generate_sources_file(
    spec_texts: Sequence[str],
    samples: int,
    output_path: str,
    config: Optional[Dict[str, Any]] = None,
) -> str:
    """Parse "kind:param" specs, synthesize the sources and write them out.

    CSV keeps the unit-variance values; WAV output is peak-normalized.
    """
    specs = [SourceSpec.parse(text) for text in spec_texts]
    sources = gen_sources(specs, samples)
    io_config = get_io_config(config or {})
    save_signals(
        sources,
        output_path,
        sample_rate=io_config.get("sample_rate", 44100),
        wav_peak=io_config.get("wav_peak", 0.99),
    )
    logger.info(f"Wrote {sources.shape[0]} sources x {samples} samples to {output_path}")
    return output_path


def resolve_mixing_matrix(
    channels: int,
    matrix_path: Optional[str] = None,
    seed: Optional[int] = None,
    reference_matrix: bool = False,
    config: Optional[Dict[str, Any]] = None,
) -> np.ndarray:
    """Pick the mixing matrix from a CSV file, the example matrix or a seeded draw"""
    chosen = sum([matrix_path is not None, seed is not None, reference_matrix])
    if chosen != 1:
        raise ValueError("Give exactly one of --matrix, --seed or --reference-matrix")
    if matrix_path is not None:
        return read_csv_matrix(matrix_path)
    if reference_matrix:
        return REFERENCE_MIXING_MATRIX.copy()
    mixing_config = get_mixing_config(config or {})
    return random_mixing_matrix(
        channels,
        seed,
        min_abs_determinant=mixing_config.get("min_abs_determinant", 0.01),
        max_attempts=mixing_config.get("max_attempts", 100),
    )


def mix_sources_file(
    source_paths: Sequence[str],
    output_path: str,
    matrix_path: Optional[str] = None,
    seed: Optional[int] = None,
    reference_matrix: bool = False,
    save_matrix_path: Optional[str] = None,
    config: Optional[Dict[str, Any]] = None,
) -> Tuple[str, np.ndarray]:
    """Mix the source file(s) and write the mixtures (and optionally A as CSV).

    The output format follows the extension; see save_signals.
    """
    loaded = load_signals(source_paths)
    a = resolve_mixing_matrix(loaded.matrix.shape[0], matrix_path, seed, reference_matrix, config)
    mixed = mix(loaded.matrix, a)
    io_config = get_io_config(config or {})
    save_signals(
        mixed,
        output_path,
        sample_rate=loaded.sample_rate or io_config.get("sample_rate", 44100),
        image_size=loaded.image_size,
        wav_peak=io_config.get("wav_peak", 0.99),
    )
    if save_matrix_path:
        write_csv_matrix(save_matrix_path, a)
    return output_path, a
