#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Domain types for ZicGdof
Antenna configurations, interference exponents, f() term specifications and GDoF points
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from src.core.errors import InvalidConfigError

RationalLike = Union[int, Fraction, str, Decimal, float]

_TUPLE_SPLIT = re.compile(r"[,\s]+")


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce a value to an exact Fraction.

    Strings are parsed as "num/den" or as decimal literals, so "0.4" becomes 2/5
    exactly. Floats go through their shortest repr for the same reason.

    Raises:
        ValueError: if the value cannot be read as a rational number
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e
    raise ValueError(f"Not a rational number: {value!r}")


def positive_part(x: Fraction) -> Fraction:
    """(x)+ = max(x, 0)"""
    return x if x > 0 else Fraction(0)


def _check_count(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidConfigError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class AntennaConfig:
    """Antenna counts (M1, M2, N1, N2) of the two-user Z channel.

    T1 has M1 antennas, T2 has M2, R1 has N1 and R2 has N2. The only cross
    link is T2 -> R1.
    """

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("m1", "m2", "n1", "n2"):
            _check_count(name, getattr(self, name), 1)

    @classmethod
    def parse(cls, text: str) -> "AntennaConfig":
        """Parse "M1,M2,N1,N2" (commas or whitespace)."""
        parts = [p for p in _TUPLE_SPLIT.split(text.strip().strip("()")) if p]
        if len(parts) != 4:
            raise InvalidConfigError(f"Expected four antenna counts M1,M2,N1,N2, got {text!r}")
        try:
            counts = [int(p) for p in parts]
        except ValueError as e:
            raise InvalidConfigError(f"Antenna counts must be integers: {text!r}") from e
        return cls(*counts)

    @property
    def n1_prime(self) -> int:
        return min(self.m2, self.n1)

    @property
    def q(self) -> int:
        return min(self.m2, self.n1)

    @property
    def p(self) -> int:
        return min(self.m2, self.n1 + self.n2)

    @property
    def is_canonical(self) -> bool:
        """True when M1 <= N1 <= M1+M2 and N2 <= M2 <= N1+N2."""
        return (
            self.m1 <= self.n1
            and self.n1 <= self.m1 + self.m2
            and self.n2 <= self.m2
            and self.m2 <= self.n1 + self.n2
        )

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.m1, self.m2, self.n1, self.n2)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class Alpha:
    """Interference exponent: INR = SNR^alpha on the T2 -> R1 link."""

    value: Fraction

    def __post_init__(self):
        try:
            value = to_fraction(self.value)
        except ValueError as e:
            raise InvalidConfigError(str(e)) from e
        if value < 0:
            raise InvalidConfigError(f"alpha must be non-negative, got {value}")
        object.__setattr__(self, "value", value)

    @classmethod
    def of(cls, value: Union["Alpha", RationalLike]) -> "Alpha":
        return value if isinstance(value, Alpha) else cls(value)

    @property
    def is_weak(self) -> bool:
        # alpha = 1 counts as weak interference
        return self.value <= 1

    @property
    def is_strong(self) -> bool:
        return self.value > 1

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class FTermSpec:
    """Arguments of f(u, (a1, u1), (a2, u2)).

    The pre-log of log|I_u + rho^a1 H1 H1^H + rho^a2 H2 H2^H| with H1 u x u1
    and H2 u x u2. Exponents may be negative; f clips them.
    """

    u: int
    a1: Fraction
    u1: int
    a2: Fraction
    u2: int

    def __post_init__(self):
        for name in ("u", "u1", "u2"):
            _check_count(name, getattr(self, name), 0)
        object.__setattr__(self, "a1", to_fraction(self.a1))
        object.__setattr__(self, "a2", to_fraction(self.a2))

    def swapped(self) -> "FTermSpec":
        return FTermSpec(self.u, self.a2, self.u2, self.a1, self.u1)


@dataclass(frozen=True, order=True)
class GdofPoint:
    """A GDoF pair (d1, d2)."""

    d1: Fraction
    d2: Fraction

    def __post_init__(self):
        d1 = to_fraction(self.d1)
        d2 = to_fraction(self.d2)
        if d1 < 0 or d2 < 0:
            raise ValueError(f"GDoF must be non-negative, got ({d1}, {d2})")
        object.__setattr__(self, "d1", d1)
        object.__setattr__(self, "d2", d2)

    @property
    def total(self) -> Fraction:
        return self.d1 + self.d2

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return (self.d1, self.d2)

    def __str__(self) -> str:
        return f"({self.d1}, {self.d2})"
