# -*- coding: utf-8 -*-
"""Delayed versus perfect CSIT, GDoF versus DoF, TIN, and sum-GDoF series."""

from fractions import Fraction

import pytest

from src.core.comparison import (
    compare_regions,
    delayed_csit_sufficient,
    divergence_intervals,
    is_v_shaped,
    region_for,
    sum_gdof_series,
    sum_matches_perfect,
)
from src.core.gdof import delayed_region, dof_region_delayed, perfect_csit_region, tin_region
from src.core.region import contains, equals, subset
from src.core.types import AntennaConfig, GdofPoint
from src.services.verification_service import canonical_configs
from src.utils.serialization import parse_alpha_grid

Q = Fraction


@pytest.mark.parametrize("alpha, corners", [
    ("0.4", [("1.6", 2), (2, "1.6")]),
    ("0.8", [("1.2", 2), (2, "1.2")]),
    ("1", [(1, 2), (2, 1)]),
    ("1.2", [("1.4", 2), (2, "1.4")]),
    ("1.6", [(2, 2)]),
])
def test_regions_of_the_2232_channel(cfg_2232, alpha, corners):
    region = delayed_region(cfg_2232, alpha)
    inner = [v for v in region.vertices if v.d1 > 0 and v.d2 > 0]
    assert inner == [GdofPoint(*c) for c in corners[::-1]]


def test_tin_is_strictly_inside_the_delayed_region(cfg_1211):
    delayed = delayed_region(cfg_1211, "0.4")
    tin = tin_region(cfg_1211, "0.4")
    assert subset(tin, delayed)
    assert not equals(tin, delayed)
    assert contains(delayed, GdofPoint("0.8", 1))
    assert not contains(tin, GdofPoint("0.8", 1))


@pytest.mark.parametrize("alpha", ["0", "0.2", "0.4", "0.6", "0.8", "1", "1.2", "1.4", "1.6", "2", "3"])
def test_delayed_equals_perfect_for_2232(cfg_2232, alpha):
    assert equals(delayed_region(cfg_2232, alpha), perfect_csit_region(cfg_2232, alpha))
    assert delayed_csit_sufficient(cfg_2232, alpha)


@pytest.mark.parametrize("counts, alpha", [
    ((1, 2, 1, 1), "0.4"),
    ((1, 2, 1, 1), "0.8"),
    ((1, 2, 1, 1), "1.4"),
    ((2, 4, 3, 3), "0.6"),
    ((2, 4, 3, 3), "1.4"),
])
def test_delayed_is_strictly_inside_perfect_in_case_two(counts, alpha):
    cfg = AntennaConfig(*counts)
    verdict = compare_regions(cfg, alpha)
    assert verdict.delayed_subset_perfect
    assert not verdict.delayed_equals_perfect
    assert not delayed_csit_sufficient(cfg, alpha)


@pytest.mark.parametrize("alpha", ["0.1", "0.3", "0.6", "0.9", "1"])
def test_same_sum_despite_strict_inclusion(cfg_1212, alpha):
    delayed = delayed_region(cfg_1212, alpha)
    perfect = perfect_csit_region(cfg_1212, alpha)
    assert subset(delayed, perfect)
    assert not equals(delayed, perfect)
    assert sum_matches_perfect(cfg_1212, alpha)


def test_compare_verdict(cfg_2232):
    verdict = compare_regions(cfg_2232, "0.6")
    assert verdict.delayed_equals_perfect
    assert verdict.delayed_sum == verdict.perfect_sum == Q("3.4")
    assert verdict.dof_subset_delayed
    assert not verdict.delayed_equals_dof
    data = verdict.to_dict()
    assert data["delayed_sum"] == "17/5"
    assert set(verdict.regions) == {"delayed", "perfect", "dof"}


def test_compare_verdict_matches_region_operations(cfg_2433):
    verdict = compare_regions(cfg_2433, "1.4")
    delayed, perfect, dof = (verdict.regions[k] for k in ("delayed", "perfect", "dof"))
    assert verdict.delayed_subset_perfect == subset(delayed, perfect)
    assert verdict.delayed_equals_perfect == equals(delayed, perfect)
    assert verdict.dof_subset_delayed == subset(dof, delayed)
    assert verdict.delayed_equals_dof == equals(delayed, dof)


def test_region_for_unknown_kind(cfg_2232):
    assert equals(region_for(cfg_2232, 1, "dof"), delayed_region(cfg_2232, 1))
    with pytest.raises(ValueError):
        region_for(cfg_2232, 1, "instant")


@pytest.mark.parametrize("counts", [(2, 2, 3, 2), (1, 2, 1, 1), (1, 2, 1, 2), (2, 4, 3, 3)])
def test_sum_series_is_v_shaped(counts):
    rows = sum_gdof_series(AntennaConfig(*counts), parse_alpha_grid("0:3:1/10"), ["delayed", "perfect", "tin"])
    assert is_v_shaped(rows, "delayed")
    minimum = min(row.values["delayed"] for row in rows)
    assert [row.values["delayed"] for row in rows if row.alpha == 1] == [minimum]
    assert all(row.values["tin"] <= row.values["delayed"] <= row.values["perfect"] for row in rows)


def test_series_agree_on_weak_interference_and_diverge_above(cfg_1212):
    rows = sum_gdof_series(cfg_1212, parse_alpha_grid("0:3:0.1"), ["delayed", "perfect"])
    assert all(row.values["delayed"] == row.values["perfect"] for row in rows if row.alpha <= 1)
    intervals = divergence_intervals(rows)
    assert intervals
    assert all(start > 1 for start, _ in intervals)


def test_divergence_intervals_are_maximal_runs():
    rows = sum_gdof_series(AntennaConfig(1, 2, 1, 1), [Q(k, 2) for k in range(7)], ["delayed", "perfect"])
    assert divergence_intervals(rows) == [[Q(1, 2), Q(3, 2)]]


@pytest.mark.parametrize("max_antennas", [3, pytest.param(6, marks=pytest.mark.slow)])
def test_region_nesting_over_canonical_configs(max_antennas):
    alphas = [Q(k, 4) for k in range(13)]
    for cfg in canonical_configs(max_antennas):
        dof = dof_region_delayed(cfg)
        assert equals(delayed_region(cfg, 1), dof), cfg
        for alpha in alphas:
            delayed = delayed_region(cfg, alpha)
            assert subset(delayed, perfect_csit_region(cfg, alpha)), (cfg, alpha)
            assert subset(dof, delayed), (cfg, alpha)
