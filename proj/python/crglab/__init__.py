"""Factorizations of Coxeter elements in G(d, r, n) and a numerical LL-map lab."""

import json

from ._core import (
    Group,
    NumericError,
    UnsupportedGroup,
    coxeter_loop,
    critical_values,
    random_generic,
    rlbl,
)
from . import _core


def group_info(d, r, n):
    return json.loads(_core.group_info_json(d, r, n))


def verify(group):
    return json.loads(group.verify_json())


def passports(group):
    return json.loads(group.passports_json())


def fiber(degree, seed=0):
    return json.loads(_core.fiber_json(degree, seed))


def equivariance(degree, trials=20, seed=0):
    return json.loads(_core.equivariance_json(degree, trials, seed))


__all__ = [
    "Group",
    "NumericError",
    "UnsupportedGroup",
    "coxeter_loop",
    "critical_values",
    "equivariance",
    "fiber",
    "group_info",
    "passports",
    "random_generic",
    "rlbl",
    "verify",
]
