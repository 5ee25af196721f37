"""Fuzzy topologies induced by a self-map of a finite set.

Grades are exact rationals written as strings ("0", "1/2", "1").
"""

import json

from ._fuzztop import (
    ConsistencyError,
    InputError,
    PreconditionError,
    default_window,
    opens,
    run,
    zadeh_image,
    zadeh_preimage,
)
from . import _fuzztop


def check(f, space, window=None, x0=None, k=None):
    """Property report of one space as a dict."""
    return json.loads(_fuzztop.check_json(f, space, window, x0, k))


def map_report(f, space, window=None, x0=None, k=None):
    return json.loads(_fuzztop.map_json(f, space, window, x0, k))


def verify(max_size, k_values, window=None):
    """Exhaustive sweep over all instances up to max_size."""
    return json.loads(_fuzztop.verify_json(max_size, list(k_values), window))


__all__ = [
    "ConsistencyError",
    "InputError",
    "PreconditionError",
    "check",
    "default_window",
    "map_report",
    "opens",
    "run",
    "verify",
    "zadeh_image",
    "zadeh_preimage",
]
