# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# CSV signal matrices: one channel per row, no header
import csv
import math
import os
import re
from typing import List

import numpy as np

from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.utils.errors import MatrixParseError

# Decimal or scientific notation only
DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def read_csv_matrix(path: str) -> np.ndarray:
    """Parse a rectangular comma-separated numeric file into a channels x samples matrix.

    Raises:
        FileNotFoundError: if the file does not exist
        MatrixParseError: on empty input, ragged rows or non-numeric cells
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")

    rows: List[List[float]] = []
    with open(path, "r", encoding="utf-8", newline="") as f:
        for row_number, cells in enumerate(csv.reader(f), start=1):
            if not cells or all(not cell.strip() for cell in cells):
                # Blank lines are skipped
                continue
            values = []
            for column_number, cell in enumerate(cells, start=1):
                if not DECIMAL.fullmatch(cell.strip()):
                    raise MatrixParseError(
                        f"{path}: non-numeric cell {cell!r}", row_number, column_number
                    )
                value = float(cell)
                if not math.isfinite(value):
                    raise MatrixParseError(
                        f"{path}: non-finite cell {cell!r}", row_number, column_number
                    )
                values.append(value)
            if rows and len(values) != len(rows[0]):
                raise MatrixParseError(
                    f"{path}: ragged row with {len(values)} cells, expected {len(rows[0])}",
                    row_number,
                    min(len(values), len(rows[0])) + 1,
                )
            rows.append(values)

    if not rows:
        raise MatrixParseError(f"{path}: file contains no data", 1)
    return np.array(rows, dtype=np.float64)


def write_csv_matrix(path: str, matrix) -> None:
    """Write with 17 significant digits so that reading back is value-exact"""
    matrix = as_signal_matrix(matrix, "matrix")
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    np.savetxt(path, matrix, fmt="%.17g", delimiter=",", newline="\n")


class CSVParser:
    """Parser for CSV signal matrices"""

    def parse(self, file_path: str) -> np.ndarray:
        return read_csv_matrix(file_path)

    def save(self, content: np.ndarray, output_path: str) -> None:
        write_csv_matrix(output_path, content)
