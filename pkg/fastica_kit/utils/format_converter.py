# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the terms described in the LICENSE file in
# the root directory of this source tree.
# Utils for report format conversions
import csv
import json
import os
from typing import Any, Dict

from pydantic import BaseModel

REPORT_COLUMNS = ["nonlinearity", "c_ave", "t_ave_seconds", "mean_iterations", "convergence_rate"]


def _ensure_parent(output_path: str) -> None:
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def to_json(data: Any, output_path: str) -> str:
    """Save a pydantic model or plain dict as indented JSON"""
    _ensure_parent(output_path)
    if isinstance(data, BaseModel):
        payload: Dict[str, Any] = data.model_dump(mode="json")
    else:
        payload = data
    with open(output_path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2)
    return output_path


def to_csv(report: Any, output_path: str) -> str:
    """Save benchmark rows as CSV with the fixed report columns"""
    _ensure_parent(output_path)
    with open(output_path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(REPORT_COLUMNS)
        for row in report.rows:
            writer.writerow([
                row.nonlinearity.value,
                repr(row.c_ave),
                repr(row.t_ave_seconds),
                repr(row.mean_iterations),
                repr(row.convergence_rate),
            ])
    return output_path


def save_report(report: Any, output_path: str) -> str:
    """Write a benchmark report as CSV or JSON depending on the extension"""
    ext = os.path.splitext(output_path)[1].lower()
    if ext == ".csv":
        return to_csv(report, output_path)
    if ext == ".json":
        return to_json(report, output_path)
    raise ValueError(f"Unknown report format: {ext or '(none)'} (expected .csv or .json)")
