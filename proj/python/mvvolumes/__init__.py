"""Exact Masur-Veech volumes of odd strata of quadratic differentials.

Volumes are returned as ``(Fraction, d)`` meaning ``Fraction * pi**d``.
"""

from ._core import (
    Unavailable,
    breakdown,
    completed,
    count_metrics,
    cylinders,
    expand,
    kontsevich,
    pin_minimal_strata,
    st_count,
    table_one,
    volume,
)

__all__ = [
    "Unavailable",
    "breakdown",
    "completed",
    "count_metrics",
    "cylinders",
    "expand",
    "kontsevich",
    "pin_minimal_strata",
    "st_count",
    "table_one",
    "volume",
]
