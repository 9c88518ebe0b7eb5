# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Synthetic sources and mixing matrices
from fastica_kit.generators.source_generator import SourceKind, SourceSpec, gen_sources
from fastica_kit.generators.mixing import REFERENCE_MIXING_MATRIX, mix, random_mixing_matrix
