# -*- coding: utf-8 -*-
"""Antenna configurations, exponents and exact rational coercion."""

from decimal import Decimal
from fractions import Fraction

import pytest

from src.core.errors import InvalidConfigError
from src.core.types import AntennaConfig, Alpha, FTermSpec, GdofPoint, positive_part, to_fraction


@pytest.mark.parametrize("value, expected", [
    (3, Fraction(3)),
    ("2/5", Fraction(2, 5)),
    ("0.4", Fraction(2, 5)),
    (" 1.25 ", Fraction(5, 4)),
    (Decimal("0.1"), Fraction(1, 10)),
    (0.1, Fraction(1, 10)),
    (Fraction(7, 3), Fraction(7, 3)),
])
def test_to_fraction_is_exact(value, expected):
    assert to_fraction(value) == expected


@pytest.mark.parametrize("value", ["abc", "1/0", True, None, [1]])
def test_to_fraction_rejects_non_rationals(value):
    with pytest.raises(ValueError):
        to_fraction(value)


def test_positive_part():
    assert positive_part(Fraction(-1, 3)) == 0
    assert positive_part(Fraction(1, 3)) == Fraction(1, 3)


def test_parse_config_accepts_commas_spaces_and_parentheses():
    assert AntennaConfig.parse("2,2,3,2") == AntennaConfig(2, 2, 3, 2)
    assert AntennaConfig.parse("(1, 2, 1, 1)") == AntennaConfig(1, 2, 1, 1)
    assert AntennaConfig.parse("2 4 3 3").as_tuple() == (2, 4, 3, 3)


@pytest.mark.parametrize("text", ["2,2,3", "2,2,3,2,1", "a,b,c,d", "2,0,3,2", "2,-1,3,2"])
def test_parse_config_rejects_bad_tuples(text):
    with pytest.raises(InvalidConfigError):
        AntennaConfig.parse(text)


def test_config_rejects_non_integer_counts():
    with pytest.raises(InvalidConfigError):
        AntennaConfig(2, 2.0, 3, 2)
    with pytest.raises(InvalidConfigError):
        AntennaConfig(True, 2, 3, 2)


def test_derived_dimensions():
    cfg = AntennaConfig(2, 4, 3, 3)
    assert cfg.n1_prime == 3
    assert cfg.q == 3
    assert cfg.p == 4
    assert str(cfg) == "(2,4,3,3)"


@pytest.mark.parametrize("counts, canonical", [
    ((2, 2, 3, 2), True),
    ((1, 2, 1, 1), True),
    ((2, 6, 3, 2), False),
    ((3, 2, 2, 2), False),
    ((1, 1, 3, 1), False),
    ((1, 1, 1, 2), False),
])
def test_is_canonical(counts, canonical):
    assert AntennaConfig(*counts).is_canonical is canonical


def test_alpha_coerces_and_classifies():
    assert Alpha("0.4").value == Fraction(2, 5)
    assert Alpha(1).is_weak
    assert not Alpha(1).is_strong
    assert Alpha("7/5").is_strong
    assert Alpha.of(Alpha(2)) == Alpha(2)
    assert str(Alpha("1.4")) == "7/5"


@pytest.mark.parametrize("value", [-1, "-0.1", "x"])
def test_alpha_rejects_invalid_values(value):
    with pytest.raises(InvalidConfigError):
        Alpha(value)


def test_fterm_spec_swaps_components():
    spec = FTermSpec(3, "0.6", 4, 1, 2)
    assert spec.a1 == Fraction(3, 5)
    assert spec.swapped() == FTermSpec(3, 1, 2, Fraction(3, 5), 4)


def test_gdof_point_is_ordered_and_non_negative():
    assert GdofPoint("0.8", 1) < GdofPoint(1, "0.6")
    assert GdofPoint("1/2", "3/2").total == 2
    with pytest.raises(ValueError):
        GdofPoint(-1, 0)
