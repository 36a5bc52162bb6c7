"""Exception hierarchy.

Mathematical check failures are never raised; they are reported through
:class:`kenmotsu_lab.checks.ValidationReport`. Exceptions signal malformed
input or violated preconditions.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(WorkbenchError, ValueError):
    """Array shapes or dimensions do not fit together."""


class DimensionMismatch(StructuralError):
    pass


class SingularMatrix(WorkbenchError, ArithmeticError):
    pass


class EvenDimensionError(StructuralError):
    """Contact operations need an odd dimension 2n+1."""


class EtaMismatch(WorkbenchError, ValueError):
    """A supplied one-form differs from the metric dual of xi."""


class NonPositiveParameter(WorkbenchError, ValueError):
    pass


class AsymmetricHessian(WorkbenchError, ValueError):
    """The candidate gradient field has a non-symmetric Hessian.

    On a frame model with constant components this means g(Df, .) is not a
    closed one-form, so Df is not the gradient of any function.
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class ParseError(WorkbenchError, ValueError):
    def __init__(self, message: str, path: str = "", line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(f"at {path}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.path = path
        self.line = line


class IndexOutOfRange(ParseError):
    pass


class AsymmetricMetricInput(ParseError):
    pass
