# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Context Manager
from pathlib import Path
from typing import Any, Dict, Optional, Union

from fastica_kit.utils.config import DEFAULT_CONFIG_PATH, load_config


class AppContext:
    """Context manager for global app state"""

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """Initialize app context"""
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self.config: Dict[str, Any] = {}
        self.verbose = False

    def load(self, config_path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
        """(Re)load the configuration, optionally from a new path"""
        if config_path:
            self.config_path = config_path
        self.config = load_config(self.config_path)
        return self.config
