"""Exact n-contact curves on rational elliptic curves."""

from ._core import (
    Curve,
    Error,
    Point,
    Report,
    contact,
    is_smooth,
    order,
    reproduce,
    run_session,
    sections,
    xi,
    zariski,
)

__all__ = [
    "Curve",
    "Error",
    "Point",
    "Report",
    "contact",
    "is_smooth",
    "order",
    "reproduce",
    "run_session",
    "sections",
    "xi",
    "zariski",
]
