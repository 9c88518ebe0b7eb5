# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Load and save signal matrices in the supported file formats
import logging
import os
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from fastica_kit.parsers.csv_parser import CSVParser
from fastica_kit.parsers.pgm_parser import ImageBuffer, PGMParser
from fastica_kit.parsers.wav_parser import AudioBuffer, WAVParser

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]
Parser = Union[CSVParser, WAVParser, PGMParser]

SIGNAL_EXTENSIONS = [".csv", ".wav", ".pgm"]


@dataclass
class LoadedSignals:
    """Rows gathered from one or more files plus the metadata needed to write them back"""

    matrix: np.ndarray
    sample_rate: Optional[int] = None
    image_size: Optional[Tuple[int, int]] = None


def determine_parser(file_path: PathLike) -> Parser:
    """Determine the appropriate parser for a file by its extension"""
    ext = os.path.splitext(str(file_path))[1].lower()
    parsers = {
        ".csv": CSVParser,
        ".wav": WAVParser,
        ".pgm": PGMParser,
    }
    if ext not in parsers:
        raise ValueError(
            f"Unsupported file extension: {ext or '(none)'} (expected one of "
            f"{', '.join(SIGNAL_EXTENSIONS)})"
        )
    return parsers[ext]()


def load_signals(paths: Sequence[PathLike]) -> LoadedSignals:
    """Stack the rows of every file; all files must have the same sample count"""
    if not paths:
        raise ValueError("No input files given")

    rows: List[np.ndarray] = []
    loaded = LoadedSignals(matrix=np.zeros((0, 0)))
    for path in paths:
        path = str(path)
        content = determine_parser(path).parse(path)
        if isinstance(content, AudioBuffer):
            if loaded.sample_rate not in (None, content.sample_rate):
                raise ValueError(
                    f"{path}: sample rate {content.sample_rate} differs from "
                    f"{loaded.sample_rate}"
                )
            loaded.sample_rate = content.sample_rate
            matrix = content.signal
        elif isinstance(content, ImageBuffer):
            size = (content.width, content.height)
            if loaded.image_size not in (None, size):
                raise ValueError(f"{path}: image size {size} differs from {loaded.image_size}")
            loaded.image_size = size
            matrix = content.signal
        else:
            matrix = content
        if rows and matrix.shape[1] != rows[0].shape[1]:
            raise ValueError(
                f"{path}: {matrix.shape[1]} samples per channel, expected {rows[0].shape[1]}"
            )
        logger.debug(f"Loaded {matrix.shape[0]} channel(s) from {path}")
        rows.append(matrix)

    loaded.matrix = np.vstack(rows)
    return loaded


def rescale_to_peak(matrix: np.ndarray, peak: float) -> np.ndarray:
    """Scale every row so that its largest magnitude equals peak"""
    maxima = np.max(np.abs(matrix), axis=1, keepdims=True)
    maxima[maxima == 0] = 1.0
    return matrix / maxima * peak


def rescale_to_unit_interval(matrix: np.ndarray) -> np.ndarray:
    """Min-max scale every row into [0, 1]"""
    low = matrix.min(axis=1, keepdims=True)
    span = matrix.max(axis=1, keepdims=True) - low
    span[span == 0] = 1.0
    return (matrix - low) / span


def save_signals(
    matrix: np.ndarray,
    output_path: PathLike,
    sample_rate: int = 44100,
    image_size: Optional[Tuple[int, int]] = None,
    wav_peak: float = 0.99,
) -> List[str]:
    """Write a matrix in the format implied by the extension.

    CSV gets the raw values. WAV gets every row rescaled to wav_peak. PGM writes one
    image per row to <stem>_<row>.pgm, each min-max rescaled into [0, 1].

    Returns:
        Paths of the written files
    """
    output_path = str(output_path)
    parser = determine_parser(output_path)

    if isinstance(parser, CSVParser):
        parser.save(matrix, output_path)
        return [output_path]

    if isinstance(parser, WAVParser):
        buffer = AudioBuffer(signal=rescale_to_peak(matrix, wav_peak), sample_rate=sample_rate)
        parser.save(buffer, output_path)
        return [output_path]

    if image_size is None:
        raise ValueError("Writing PGM output needs the image size of the inputs")
    width, height = image_size
    stem = os.path.splitext(output_path)[0]
    written = []
    for index, row in enumerate(rescale_to_unit_interval(matrix)):
        path = f"{stem}_{index}.pgm"
        parser.save(ImageBuffer(signal=row.reshape(1, -1), width=width, height=height), path)
        written.append(path)
    return written
