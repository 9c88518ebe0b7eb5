# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Nonlinearities, whitening and the deflationary FastICA solver
from fastica_kit.models.nonlinearity import NonlinearityKind
from fastica_kit.models.preprocess import WhiteningModel, whiten
from fastica_kit.models.fastica import FastIcaConfig, SeparationResult, run
