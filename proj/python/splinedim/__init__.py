"""Exact spline-dimension computations and the structured-matrix layer behind them.

Everything is exact rational arithmetic; matrices cross the boundary as text
("1,1/2;0,-3" style), dimensions as integers.
"""

from ._core import (
    alfeld_schumaker,
    conjecture_report,
    delta_s_document,
    det,
    epsilon,
    k_dim,
    kernel_dim_total,
    nullspace,
    rank,
    roth_lower_solve,
    roth_triangular_solve,
    schur_dim_det,
    schur_dim_weyl,
    spline_dim,
    toeplitz_positivity,
    u_matrix,
    verify,
    verify_report_json,
)

__all__ = [
    "alfeld_schumaker",
    "conjecture_report",
    "delta_s_document",
    "det",
    "epsilon",
    "k_dim",
    "kernel_dim_total",
    "nullspace",
    "rank",
    "roth_lower_solve",
    "roth_triangular_solve",
    "schur_dim_det",
    "schur_dim_weyl",
    "spline_dim",
    "toeplitz_positivity",
    "u_matrix",
    "verify",
    "verify_report_json",
]
