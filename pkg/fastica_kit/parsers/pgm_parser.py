# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Binary PGM (P5, maxval 255) parser logic
import os
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.utils.errors import UnsupportedFormatError

MAXVAL = 255


@dataclass(frozen=True)
class ImageBuffer:
    """Row-major flattened grayscale images, one per row, values in [0, 1]"""

    signal: np.ndarray
    width: int
    height: int

    def __post_init__(self):
        signal = as_signal_matrix(self.signal, "image signal")
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"Image size must be positive, got {self.width}x{self.height}")
        if signal.shape[1] != self.width * self.height:
            raise ValueError(
                f"Row length {signal.shape[1]} does not match {self.width}x{self.height}"
            )
        if np.any(signal < 0.0) or np.any(signal > 1.0):
            raise ValueError("Pixel values must lie in [0, 1]")
        object.__setattr__(self, "signal", signal)


def _read_header(data: bytes, path: str) -> Tuple[List[bytes], int]:
    """Return the four header tokens and the offset of the pixel data"""
    tokens: List[bytes] = []
    position = 0
    while len(tokens) < 4:
        # Skip whitespace and comment lines between tokens
        while position < len(data) and data[position : position + 1].isspace():
            position += 1
        if data[position : position + 1] == b"#":
            end = data.find(b"\n", position)
            position = len(data) if end < 0 else end + 1
            continue
        start = position
        while position < len(data) and not data[position : position + 1].isspace():
            position += 1
        if start == position:
            raise UnsupportedFormatError(f"{path}: truncated PGM header", "header")
        tokens.append(data[start:position])
        if tokens[0] != b"P5":
            raise UnsupportedFormatError(
                f"{path}: magic is {tokens[0]!r}, only binary PGM (P5) is supported", "magic"
            )
    # Exactly one whitespace byte separates maxval from the raster
    return tokens, position + 1


def read_pgm(path: str) -> ImageBuffer:
    """Read a binary PGM; pixel p becomes p / 255, flattened row-major into one row"""
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    with open(path, "rb") as f:
        data = f.read()

    tokens, offset = _read_header(data, path)
    try:
        width, height, maxval = (int(token) for token in tokens[1:])
    except ValueError:
        raise UnsupportedFormatError(f"{path}: non-numeric PGM header", "header") from None
    if width <= 0 or height <= 0:
        raise UnsupportedFormatError(f"{path}: image size is {width}x{height}", "header")
    if maxval != MAXVAL:
        raise UnsupportedFormatError(
            f"{path}: maxval is {maxval}, only {MAXVAL} is supported", "maxval"
        )

    expected = width * height
    raster = np.frombuffer(data, dtype=np.uint8, count=-1, offset=min(offset, len(data)))
    if raster.size < expected:
        raise UnsupportedFormatError(
            f"{path}: raster has {raster.size} bytes, expected {expected}", "raster"
        )
    pixels = raster[:expected].astype(np.float64) / MAXVAL
    return ImageBuffer(signal=pixels.reshape(1, -1), width=width, height=height)


def write_pgm(path: str, buffer: ImageBuffer) -> None:
    """Write a single-image buffer as binary PGM, rounding to the 8-bit grid"""
    if buffer.signal.shape[0] != 1:
        raise ValueError(
            f"A PGM file holds one image; buffer has {buffer.signal.shape[0]} rows"
        )
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    pixels = np.clip(np.rint(buffer.signal[0] * MAXVAL), 0, MAXVAL).astype(np.uint8)
    header = f"P5\n{buffer.width} {buffer.height}\n{MAXVAL}\n".encode("ascii")
    with open(path, "wb") as f:
        f.write(header)
        f.write(pixels.tobytes())


class PGMParser:
    """Parser for 8-bit binary PGM images"""

    def parse(self, file_path: str) -> ImageBuffer:
        return read_pgm(file_path)

    def save(self, content: ImageBuffer, output_path: str) -> None:
        write_pgm(output_path, content)
