"""Exact derangement proportions and conjugacy-class counts.

Ratios come back as :class:`fractions.Fraction`, big integers as ``int``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DEFAULT_CAP, Error

__all__ = [
    "DEFAULT_CAP",
    "Error",
    "class_count",
    "derangement_proportion",
    "gl_class_count",
    "group_order",
    "limit_partial",
    "run",
    "verify",
    "young_limiting_delta",
]


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def derangement_proportion(degree, generators, cap=DEFAULT_CAP):
    """Proportion of fixed-point-free elements of the group generated by
    ``generators`` (lists of images) acting on ``range(degree)``."""
    return _fraction(_core.derangement_proportion(degree, generators, cap))


def group_order(degree, generators, cap=DEFAULT_CAP):
    return _core.group_order(degree, generators, cap)


def class_count(family, n, q, method="brute", cap=DEFAULT_CAP):
    """``(k, k_p)``: number of conjugacy classes, and of classes of elements
    of order prime to the characteristic."""
    return _core.class_count(family, n, q, method, cap)


def gl_class_count(n, q):
    return int(_core.gl_class_count(n, q))


def limit_partial(family, q, depth=40):
    """``(item, value)`` for the truncated limiting constant of k(G)/q^n."""
    item, value = _core.limit_partial(family, q, depth)
    return item, _fraction(value)


def young_limiting_delta(n, k, cap=DEFAULT_CAP):
    return _fraction(_core.young_limiting_delta(n, k, cap))


def verify(suite, cap=DEFAULT_CAP):
    return _core.verify(suite, cap)


def run(subcommand, spec, cap=DEFAULT_CAP):
    """``(document, exit_code)`` for a spec-driven command, as the CLI
    would print it."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    text, code = _core.run_json(subcommand, spec, cap)
    return json.loads(text), code
