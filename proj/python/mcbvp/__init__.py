"""Spectral collocation for high-order two-point boundary value problems.

The heavy lifting lives in the compiled extension ``_mcbvp``; this package
re-exports its public surface.
"""

from ._mcbvp import (
    ExpressionParseError,
    Problem,
    ProblemFormatError,
    Solution,
    __version__,
    builtin_example,
    cgl_nodes,
    chebyshev_t,
    inner_product,
    load_problem,
    mcp_coefficients,
    mcp_derivative,
    mcp_derivative_series,
    mcp_eval,
    solve,
    sweep,
)

__all__ = [
    "ExpressionParseError",
    "Problem",
    "ProblemFormatError",
    "Solution",
    "__version__",
    "builtin_example",
    "cgl_nodes",
    "chebyshev_t",
    "inner_product",
    "load_problem",
    "mcp_coefficients",
    "mcp_derivative",
    "mcp_derivative_series",
    "mcp_eval",
    "solve",
    "sweep",
]
