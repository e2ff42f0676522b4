#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exceptions for ZicGdof
"""


class ZicGdofError(Exception):
    """Base class for all ZicGdof errors"""


class InvalidConfigError(ZicGdofError, ValueError):
    """Antenna counts or exponents outside their domain"""


class NonCanonicalConfigError(ZicGdofError, ValueError):
    """A closed-form operation was given antennas violating M1<=N1<=M1+M2, N2<=M2<=N1+N2"""

    def __init__(self, cfg, operation=""):
        self.cfg = cfg
        self.operation = operation
        where = f" for {operation}" if operation else ""
        super().__init__(f"Antenna configuration {cfg} is not canonical{where}")


class RegimeError(ZicGdofError, ValueError):
    """Weak-interference routine called with strong interference or vice versa"""


class UnboundedRegionError(ZicGdofError):
    """Half-plane intersection has no finite vertex set"""


class EmptyRegionError(ZicGdofError):
    """Half-plane intersection is infeasible"""


class A2OutOfRangeError(ZicGdofError, ValueError):
    """Power back-off exponent outside the range the allocation is valid for"""

    def __init__(self, a2, low, high):
        self.a2 = a2
        self.low = low
        self.high = high
        super().__init__(f"A2={a2} outside [{low}, {high}]")


class VerificationFailure(ZicGdofError):
    """An exact check that should always hold did not.

    Attributes:
        record: JSON-serialisable description of the failed check
    """

    def __init__(self, message, record=None):
        self.record = dict(record or {})
        self.record.setdefault("message", message)
        super().__init__(message)


class DecompositionMismatch(ZicGdofError):
    """g(r) differs from x(r) + l3(r) - l2(r), or l3(r) > l2(r)"""


class NumericalFailure(ZicGdofError):
    """Log-det argument could not be factorized"""


class UsageError(ZicGdofError):
    """Bad command line input; the message names the offending flag"""
