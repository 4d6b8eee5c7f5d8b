"""Numerical toolkit for the biquaternionic Riccati equation DQ + |Q|^2 = q."""

import json

from ._core import (
    Biquaternion,
    ConfigError,
    DomainError,
    Error,
    PoleError,
    PreconditionError,
    ZeroCrossing,
    ZeroDivisor,
    group_act,
    riccati_residual,
    solution_Q,
    suite_names,
    vhat,
)
from . import _core

__all__ = [
    "Biquaternion",
    "ConfigError",
    "DomainError",
    "Error",
    "PoleError",
    "PreconditionError",
    "ZeroCrossing",
    "ZeroDivisor",
    "evaluate",
    "group_act",
    "riccati_residual",
    "solution_Q",
    "suite_names",
    "verify",
    "vhat",
]


def verify(suite="all", seconds=True, **settings):
    """Run a verification suite and return the report as a dict.

    Keyword settings use the config-file keys, e.g. ``h=1e-3`` or ``**{"tol.riccati": 1e-7}``.
    """
    text = _core.run_suite_json(suite, {k: str(v) for k, v in settings.items()}, seconds)
    return json.loads(text)


def evaluate(solution, grid, fields=("Q", "q"), **params):
    """Evaluate a catalog solution on a grid string "x0,x1,nx,y0,y1,ny,z0,z1,nz".

    Returns a list of records; masked rows carry None values.
    """
    return json.loads(_core.eval_json(solution, grid, list(fields), params))
