"""Global numerical tolerances.

``EPS_EQ`` bounds floating-point equality of character values and
dimensions; ``EPS_INT`` bounds the distance to the nearest integer when a
multiplicity or degree is rounded.
"""

from __future__ import annotations

from contextlib import contextmanager

EPS_EQ = 1e-8
EPS_INT = 1e-6


def set_tolerances(eps_eq: float | None = None, eps_int: float | None = None) -> None:
    global EPS_EQ, EPS_INT
    if eps_eq is not None:
        if eps_eq <= 0:
            raise ValueError("eps_eq must be positive")
        EPS_EQ = float(eps_eq)
    if eps_int is not None:
        if eps_int <= 0:
            raise ValueError("eps_int must be positive")
        EPS_INT = float(eps_int)


@contextmanager
def tolerances(eps_eq: float | None = None, eps_int: float | None = None):
    old = (EPS_EQ, EPS_INT)
    set_tolerances(eps_eq, eps_int)
    try:
        yield
    finally:
        set_tolerances(*old)
