"""Picard groups, Chow rings and structure checks of algebraic groups from finite descriptors.

Descriptors may be passed as JSON text, a dict, or a path to a file.
Results come back as plain dicts.
"""

import json
import os

from ._core import (
    DEFAULT_GROUP_CAP,
    SCHEMA,
    DescriptorSyntaxError,
    Error,
    InvalidArgument,
    SchemaError,
    ValidationFailed,
)
from . import _core

__all__ = [
    "SCHEMA",
    "Error",
    "DescriptorSyntaxError",
    "SchemaError",
    "ValidationFailed",
    "InvalidArgument",
    "load",
    "run",
    "report",
    "validate",
    "picard",
    "ns",
    "chow",
    "hchow",
    "hpic",
    "complete",
    "structure",
    "cover",
]


def _text(descriptor):
    if isinstance(descriptor, dict):
        return json.dumps(descriptor)
    if isinstance(descriptor, os.PathLike) or (
        isinstance(descriptor, str) and not descriptor.lstrip().startswith("{") and os.path.exists(descriptor)
    ):
        with open(descriptor, "rb") as f:
            return f.read().decode("utf-8")
    if isinstance(descriptor, bytes):
        return descriptor.decode("utf-8")
    return descriptor


def load(descriptor):
    """Parse and return the canonical form of a descriptor."""
    return json.loads(_core.canonical(_text(descriptor)))


def run(command, descriptor, subgroup=None, max_degree=None, rational=False, integral=False, cap=DEFAULT_GROUP_CAP):
    """Run a command; returns (ok, result)."""
    out = json.loads(
        _core.run(command, _text(descriptor), subgroup or "", max_degree, rational, integral, cap)
    )
    return out["ok"], out["result"]


def report(command, descriptor, subgroup=None, format="json", **kw):
    """The command-line report for a command, as text."""
    return _core.report(
        command,
        _text(descriptor),
        subgroup or "",
        kw.get("max_degree"),
        kw.get("rational", False),
        kw.get("integral", False),
        kw.get("cap", DEFAULT_GROUP_CAP),
        format,
    )


def _result(command, descriptor, subgroup=None, **kw):
    return run(command, descriptor, subgroup, **kw)[1]


def validate(descriptor, subgroup=None, cap=DEFAULT_GROUP_CAP):
    return _result("validate", descriptor, subgroup, cap=cap)


def picard(descriptor):
    return _result("picard", descriptor)


def ns(descriptor, subgroup=None, cap=DEFAULT_GROUP_CAP):
    return _result("ns", descriptor, subgroup, cap=cap)


def chow(descriptor, max_degree=None, rational=False, cap=DEFAULT_GROUP_CAP):
    return _result("chow", descriptor, max_degree=max_degree, rational=rational, cap=cap)


def hchow(descriptor, subgroup, max_degree=None, cap=DEFAULT_GROUP_CAP):
    return _result("hchow", descriptor, subgroup, max_degree=max_degree, cap=cap)


def hpic(descriptor, subgroup, integral=False, cap=DEFAULT_GROUP_CAP):
    return _result("hpic", descriptor, subgroup, integral=integral, cap=cap)


def complete(descriptor, subgroup, cap=DEFAULT_GROUP_CAP):
    return _result("complete", descriptor, subgroup, cap=cap)


def structure(descriptor, subgroup=None, cap=DEFAULT_GROUP_CAP):
    return _result("structure", descriptor, subgroup, cap=cap)


def cover(descriptor):
    return _result("cover", descriptor)
