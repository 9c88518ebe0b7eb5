# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Utility files for all classes
from fastica_kit.utils.config import (
    load_config,
    get_fastica_config,
    get_benchmark_config,
    get_mixing_config,
    get_io_config,
    merge_configs,
)
from fastica_kit.utils.errors import FastICAKitError
