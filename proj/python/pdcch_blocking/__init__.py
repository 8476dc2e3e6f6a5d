# Copyright 2026 The pdcchsim Authors
# SPDX-License-Identifier: Apache-2.0
"""PDCCH blocking probability simulator and CORESET planner."""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Union

from ._core import (
    ConfigError,
    ParseError,
    allocate,
    candidate_cces,
    cce_count,
    format_results,
    parse_results,
    ue_candidate_set,
    validate_limits,
    y_value,
)
from . import _core

__all__ = [
    "ConfigError",
    "ParseError",
    "allocate",
    "candidate_cces",
    "cce_count",
    "format_results",
    "normalize_scenario",
    "parse_results",
    "plan",
    "run",
    "ue_candidate_set",
    "validate_limits",
    "y_value",
]

Source = Union[str, os.PathLike, Mapping[str, Any]]


def _text(source: Source) -> str:
    if isinstance(source, Mapping):
        return json.dumps(source)
    with open(source, encoding="utf-8") as f:
        return f.read()


def normalize_scenario(source: Source) -> dict:
    """Parse a scenario (path or dict) and return it with every default filled in."""
    return json.loads(_core.normalize_scenario(_text(source)))


def run(source: Source, *, iterations=None, seed=None, workers=0, sweep=True) -> list[dict]:
    """Run a scenario and return one record per point.

    Raises RuntimeError listing the failed points if any point could not be evaluated.
    """
    records, errors = _core.run_scenario_text(_text(source), iterations, seed, workers, sweep)
    if errors:
        raise RuntimeError("; ".join(errors))
    return records


def plan(source: Source, *, iterations=None, seed=None, workers=0) -> dict:
    """Smallest CORESET (in CCEs) meeting a planning request's blocking target."""
    return _core.plan_text(_text(source), iterations, seed, workers)
