# utils/errors.py

# Exception hierarchy shared by every package. The CLI maps exit codes from
# the `exit_code` attribute; OSError raised while writing outputs maps to 4.


class QuantsetError(Exception):
    exit_code = 1


class InputError(QuantsetError, ValueError):
    """Precondition violated: bad lengths, ranges, columns or files."""

    exit_code = 2


class DegenerateDataError(InputError):
    """Zero variance, collinear regressors or a covariance that is not positive definite."""


class ConvergenceError(QuantsetError):
    """Optimizer failed after the bounded number of restarts."""

    exit_code = 3


IO_EXIT_CODE = 4
