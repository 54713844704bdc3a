"""Exact degree bounds and Monte Carlo volumes for period witnesses."""

import json

from . import _core
from ._core import PeriodsError, normalize, power_bounds, suite_names

__all__ = [
    "PeriodsError",
    "bound",
    "evaluate",
    "normalize",
    "power_bounds",
    "ratint",
    "run",
    "sturm",
    "suite_names",
    "witness",
    "zeta",
]


def _coeffs(values):
    return [str(v) for v in values]


def evaluate(expr, samples=1_000_000, seed=0, workers=0, batch=1 << 16):
    return json.loads(_core.eval(expr, samples, seed, workers, batch))


def bound(expr):
    return json.loads(_core.bound(expr))


def witness(expr):
    return json.loads(_core.witness(expr))


def zeta(expr, t=0.5, terms=32):
    return json.loads(_core.zeta(expr, t, terms))


def ratint(num, den, lo=0, hi=1):
    """Coefficient lists are constant term first; entries may be ints, Fractions or 'p/q' strings."""
    return json.loads(_core.ratint(_coeffs(num), _coeffs(den), str(lo), str(hi)))


def sturm(coeffs, lo, hi):
    return int(_core.sturm(_coeffs(coeffs), str(lo), str(hi)))


def run(*args):
    """Runs a CLI command; returns (exit_code, parsed_stdout_or_None, stderr_text)."""
    code, out, err = _core.run([str(a) for a in args])
    try:
        parsed = json.loads(out) if out.strip() else None
    except json.JSONDecodeError:
        parsed = None
    return code, parsed, err
