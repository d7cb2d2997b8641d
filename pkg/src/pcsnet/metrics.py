"""Vector norms used throughout the package.

Distances are accumulated exactly (ints or Fractions) as a *cost* and only
turned into a float at the end, so that minimisation and tie-breaking never
depend on rounding.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import UnknownMetric

METRICS = ("euclidean", "taxicab", "chebyshev")
DEFAULT_METRIC = "euclidean"


def check_metric(metric: str) -> str:
    if metric not in METRICS:
        raise UnknownMetric(f"unknown metric {metric!r}; choose from {', '.join(METRICS)}")
    return metric


def cost(diffs: Iterable, metric: str = DEFAULT_METRIC):
    """Exact monotone surrogate of the norm of ``diffs``.

    Squared sum for euclidean, so compare costs, not distances.
    """
    if metric == "euclidean":
        return sum(d * d for d in diffs)
    if metric == "taxicab":
        return sum(abs(d) for d in diffs)
    if metric == "chebyshev":
        return max((abs(d) for d in diffs), default=0)
    raise UnknownMetric(metric)


def finish(c, metric: str = DEFAULT_METRIC) -> float:
    """Convert a cost from :func:`cost` into the actual distance."""
    if metric == "euclidean":
        return math.sqrt(c)
    return float(c)


def distance(u: Sequence, v: Sequence, metric: str = DEFAULT_METRIC) -> float:
    if len(u) != len(v):
        raise ValueError(f"vectors of different length: {len(u)} vs {len(v)}")
    check_metric(metric)
    return finish(cost((a - b for a, b in zip(u, v)), metric), metric)
