# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# 16-bit PCM WAV reading and writing
import os
from dataclasses import dataclass

import numpy as np
from scipy.io import wavfile

from fastica_kit.models.preprocess import as_signal_matrix
from fastica_kit.utils.errors import UnsupportedFormatError

# One 16-bit step is 1/32768 so that -32768 maps to exactly -1.0
PCM16_SCALE = 32768.0


@dataclass(frozen=True)
class AudioBuffer:
    """One row per audio channel, values in [-1, 1]"""

    signal: np.ndarray
    sample_rate: int

    def __post_init__(self):
        signal = as_signal_matrix(self.signal, "audio signal")
        if self.sample_rate <= 0:
            raise ValueError(f"Sample rate must be positive, got {self.sample_rate}")
        if np.any(np.abs(signal) > 1.0):
            raise ValueError("Audio samples must lie in [-1.0, 1.0]")
        object.__setattr__(self, "signal", signal)


def read_wav(path: str) -> AudioBuffer:
    """Read a 16-bit PCM WAV; sample s becomes s / 32768.

    Raises:
        FileNotFoundError: if the file does not exist
        UnsupportedFormatError: for non-PCM or non-16-bit files
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    try:
        sample_rate, data = wavfile.read(path)
    except ValueError as e:
        # scipy rejects compressed and unknown format tags here
        raise UnsupportedFormatError(f"{path}: unsupported audio_format ({e})", "audio_format")

    if np.issubdtype(data.dtype, np.floating):
        raise UnsupportedFormatError(
            f"{path}: audio_format is IEEE float, only PCM (format tag 1) is supported",
            "audio_format",
        )
    if data.dtype != np.int16:
        raise UnsupportedFormatError(
            f"{path}: bits_per_sample is not 16 (samples decode as {data.dtype}), "
            "only 16-bit samples are supported",
            "bits_per_sample",
        )

    # scipy returns (frames,) for mono and (frames, channels) otherwise
    samples = data.reshape(-1, 1) if data.ndim == 1 else data
    return AudioBuffer(signal=samples.T.astype(np.float64) / PCM16_SCALE, sample_rate=int(sample_rate))


def to_pcm16(signal: np.ndarray) -> np.ndarray:
    """clamp(round(v * 32768), -32768, 32767) as int16"""
    scaled = np.rint(np.asarray(signal, dtype=np.float64) * PCM16_SCALE)
    return np.clip(scaled, -32768, 32767).astype(np.int16)


def write_wav(path: str, buffer: AudioBuffer) -> None:
    """Write the buffer as 16-bit PCM; channels are interleaved from the rows"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    pcm = to_pcm16(buffer.signal)
    frames = pcm[0] if pcm.shape[0] == 1 else np.ascontiguousarray(pcm.T)
    wavfile.write(path, buffer.sample_rate, frames)


class WAVParser:
    """Parser for 16-bit PCM WAV audio"""

    def parse(self, file_path: str) -> AudioBuffer:
        return read_wav(file_path)

    def save(self, content: AudioBuffer, output_path: str) -> None:
        write_wav(output_path, content)
