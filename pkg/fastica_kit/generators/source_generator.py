# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Deterministic synthetic source signals
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

# Rows whose raw standard deviation falls below this cannot be normalized
_MIN_STD = 1e-8


class SourceKind(str, Enum):
    SINE = "sine"
    SAWTOOTH = "sawtooth"
    SQUARE = "square"
    UNIFORM_NOISE = "uniform"
    LAPLACIAN_NOISE = "laplace"

    @property
    def periodic(self) -> bool:
        return self in (SourceKind.SINE, SourceKind.SAWTOOTH, SourceKind.SQUARE)


_ALIASES = {
    "uniformnoise": SourceKind.UNIFORM_NOISE,
    "laplacian": SourceKind.LAPLACIAN_NOISE,
    "laplaciannoise": SourceKind.LAPLACIAN_NOISE,
}


class SourceSpec(BaseModel):
    """One synthetic source: a periodic waveform or seeded noise"""

    model_config = ConfigDict(frozen=True)

    kind: SourceKind
    period_samples: Optional[int] = None
    seed: Optional[int] = Field(default=None, ge=0, lt=2 ** 64)

    @model_validator(mode="after")
    def _check_parameters(self) -> "SourceSpec":
        if self.kind.periodic:
            if self.period_samples is None or self.period_samples < 2:
                raise ValueError(f"{self.kind.value} needs period_samples >= 2")
        elif self.seed is None:
            raise ValueError(f"{self.kind.value} needs a seed")
        return self

    @classmethod
    def parse(cls, text: str) -> "SourceSpec":
        """Parse "kind:period" for waveforms or "kind:seed" for noise, e.g. "sine:100" """
        name, _, parameter = text.strip().partition(":")
        name = name.lower()
        kind = _ALIASES.get(name)
        if kind is None:
            try:
                kind = SourceKind(name)
            except ValueError:
                names = ", ".join(k.value for k in SourceKind)
                raise ValueError(f"Unknown source kind '{name}' (expected one of: {names})") from None
        if not parameter:
            raise ValueError(f"Source spec '{text}' is missing its ':period' or ':seed' part")
        try:
            value = int(parameter)
        except ValueError:
            raise ValueError(f"Source spec '{text}': '{parameter}' is not an integer") from None
        if kind.periodic:
            return cls(kind=kind, period_samples=value)
        return cls(kind=kind, seed=value)

    def render(self, n: int) -> np.ndarray:
        """Raw (unnormalized) samples 0..n-1"""
        t = np.arange(n, dtype=np.float64)
        if self.kind is SourceKind.SINE:
            return np.sin(2.0 * np.pi * t / self.period_samples)
        if self.kind is SourceKind.SAWTOOTH:
            return 2.0 * (t % self.period_samples) / self.period_samples - 1.0
        if self.kind is SourceKind.SQUARE:
            return np.where(t % self.period_samples < self.period_samples / 2.0, 1.0, -1.0)
        rng = np.random.default_rng(self.seed)
        if self.kind is SourceKind.UNIFORM_NOISE:
            return rng.uniform(-1.0, 1.0, size=n)
        return rng.laplace(0.0, 1.0, size=n)


def gen_sources(specs: Sequence[SourceSpec], n: int) -> np.ndarray:
    """One row per spec, each scaled to zero mean and unit variance"""
    if n < 2:
        raise ValueError(f"Need at least 2 samples, got {n}")
    if not specs:
        raise ValueError("No source specs given")

    rows = []
    for index, spec in enumerate(specs):
        row = spec.render(n)
        row = row - row.mean()
        std = float(np.std(row))
        if std < _MIN_STD:
            raise ValueError(
                f"Source {index} ({spec.kind.value}) is constant over {n} samples "
                "and cannot be normalized"
            )
        rows.append(row / std)
    return np.vstack(rows)
