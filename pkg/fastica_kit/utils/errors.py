# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Exception types shared across the kit
from typing import Optional


class FastICAKitError(Exception):
    """Base class for all errors raised by fastica-kit"""


class DomainError(FastICAKitError, ValueError):
    """A nonlinearity was evaluated outside its domain (non-finite input)"""


class DegenerateInputError(FastICAKitError, ValueError):
    """Input data has no usable variance in some direction or channel"""

    def __init__(
        self,
        message: str,
        index: Optional[int] = None,
        eigenvalue: Optional[float] = None,
        channel: Optional[int] = None,
    ):
        super().__init__(message)
        self.index = index
        self.eigenvalue = eigenvalue
        self.channel = channel


class DegenerateProjectionError(FastICAKitError, ArithmeticError):
    """Deflation removed (almost) all of a weight vector"""

    def __init__(self, message: str, residual_norm: float):
        super().__init__(message)
        self.residual_norm = residual_norm


class ExtractionError(FastICAKitError, RuntimeError):
    """A component could not be extracted after repeated re-randomization"""

    def __init__(self, message: str, component: int):
        super().__init__(message)
        self.component = component


class UnsupportedFormatError(FastICAKitError, ValueError):
    """A WAV or PGM file uses a header value the parsers do not handle"""

    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field


class MatrixParseError(FastICAKitError, ValueError):
    """A CSV signal matrix could not be parsed; row and column are 1-based"""

    def __init__(self, message: str, row: int, column: Optional[int] = None):
        location = f"row {row}" if column is None else f"row {row}, column {column}"
        super().__init__(f"{message} ({location})")
        self.row = row
        self.column = column


class GenerationError(FastICAKitError, RuntimeError):
    """Random generation gave up after too many rejected draws"""
