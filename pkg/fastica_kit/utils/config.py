# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Config Utilities
import logging
import os
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

# Default config location relative to the package (original)
ORIGINAL_CONFIG_PATH = os.path.abspath(
    os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))),
                 "configs", "config.yaml")
)

# Fallback location inside the package (used by installed packages)
PACKAGE_CONFIG_PATH = os.path.abspath(
    os.path.join(os.path.dirname(os.path.dirname(__file__)), "config.yaml")
)

DEFAULT_CONFIG_PATH = PACKAGE_CONFIG_PATH


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """Load YAML configuration file"""
    if config_path is None:
        for path in [PACKAGE_CONFIG_PATH, ORIGINAL_CONFIG_PATH]:
            if os.path.exists(path):
                config_path = path
                break
        else:
            config_path = DEFAULT_CONFIG_PATH

    config_path = str(config_path)
    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Configuration file not found at {config_path}")

    logger.debug(f"Loading config from: {config_path}")
    with open(config_path, 'r') as f:
        config = yaml.safe_load(f)

    return config or {}


def get_fastica_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get solver configuration"""
    return config.get('fastica', {
        'nonlinearity': 'sin',
        'epsilon': 1e-6,
        'max_iterations': 1000,
        'seed': 0,
        'max_restarts': 5
    })


def get_benchmark_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get benchmark configuration"""
    return config.get('benchmark', {
        'repeats': 10,
        'nonlinearities': ['tanh', 'gauss', 'pow3', 'sin'],
        'workers': 1,
        'label': 'synthetic'
    })


def get_mixing_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get mixing-matrix generation configuration"""
    return config.get('mixing', {
        'min_abs_determinant': 0.01,
        'max_attempts': 100
    })


def get_io_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get file format configuration"""
    return config.get('io', {
        'sample_rate': 44100,
        'wav_peak': 0.99
    })


def merge_configs(base_config: Dict[str, Any], override_config: Dict[str, Any]) -> Dict[str, Any]:
    """Merge two configuration dictionaries"""
    result = base_config.copy()
    for key, value in override_config.items():
        if isinstance(value, dict) and key in result and isinstance(result[key], dict):
            result[key] = merge_configs(result[key], value)
        else:
            result[key] = value
    return result
