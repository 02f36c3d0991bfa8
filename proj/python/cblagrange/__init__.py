"""Bivariate Lagrange interpolation on checkerboard grids."""

from ._core import (
    Grid,
    GridPoint,
    Interpolant,
    NumericalError,
    RecurrenceCoeffs,
    ValidationError,
    chebyshev_grid,
    coeffs_from_nodes,
    count_nodes,
    eval_sequence,
    gamma_rescale,
    nodes_from_coeffs,
    padua_grid,
    quotient_dimension,
    random_grid,
)

__all__ = [
    "Grid",
    "GridPoint",
    "Interpolant",
    "NumericalError",
    "RecurrenceCoeffs",
    "ValidationError",
    "chebyshev_grid",
    "coeffs_from_nodes",
    "count_nodes",
    "eval_sequence",
    "gamma_rescale",
    "nodes_from_coeffs",
    "padua_grid",
    "quotient_dimension",
    "random_grid",
]
