# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Signal parsers for different file formats
from fastica_kit.parsers.csv_parser import CSVParser
from fastica_kit.parsers.wav_parser import WAVParser
from fastica_kit.parsers.pgm_parser import PGMParser
