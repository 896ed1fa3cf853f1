"""Roots, Mahler measures, and limit laws of the trinomials x^n - a x^k - 1."""

from ._core import (
    analyze,
    brackets,
    clausen2,
    count_outside,
    exceptional_root,
    house,
    limacon_curve,
    mahler_measure,
    measure_limit_dilog,
    measure_limit_extended,
    measure_limit_quadrature,
    rate_limit,
    solve,
    solve_poly,
)

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "brackets",
    "clausen2",
    "count_outside",
    "exceptional_root",
    "house",
    "limacon_curve",
    "mahler_measure",
    "measure_limit_dilog",
    "measure_limit_extended",
    "measure_limit_quadrature",
    "rate_limit",
    "solve",
    "solve_poly",
]
