"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific one that applies.
"""


class ValidationError(ValueError):
    """Invalid configuration or argument (CLI exit code 2)."""


class NumericError(RuntimeError):
    """Numerical computation failed, e.g. non-finite input or a solver
    that did not converge (CLI exit code 3)."""
