"""Exact star-product algebra, differential forms and gauge checks on time-dependent Moyal space."""

import json

from ._core import (
    DEFAULT_BOX_LENGTH,
    DEFAULT_GRID_SIZE,
    REPORT_SCHEMA,
    ConfigError,
    GradingError,
    ParseError,
    cross_validate,
    grid_star,
    phase_law_error,
    read_grid,
    reduce,
    suite_names,
    write_grid,
)
from . import _core

__all__ = [
    "DEFAULT_BOX_LENGTH",
    "DEFAULT_GRID_SIZE",
    "REPORT_SCHEMA",
    "ConfigError",
    "GradingError",
    "ParseError",
    "cross_validate",
    "grid_check",
    "grid_star",
    "phase_law_error",
    "planewave_report",
    "read_grid",
    "reduce",
    "run_suite",
    "suite_names",
    "write_grid",
]


def run_suite(name, seed=42, cases=-1, order=2):
    """Run a property suite and return its report as a dict."""
    return json.loads(_core.run_suite_json(name, seed, cases, order))


def planewave_report(config_text):
    """Plane-wave action report for a config with [planewave] and optional [theta] sections."""
    return json.loads(_core.planewave_report_json(config_text))


def grid_check(path):
    """Trace, cyclicity, associativity and phase-law checks on a stored grid."""
    return json.loads(_core.grid_check_json(path))
