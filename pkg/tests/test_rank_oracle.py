# -*- coding: utf-8 -*-
"""g(r) sweeps, the argmax oracle and the weak-interference loss decomposition."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import RegimeError
from src.core.gdof import canonicalize, f
from src.core.rank_oracle import argmax_g, g_of_r, loss_decomposition, rank_sweep
from src.core.types import AntennaConfig

Q = Fraction


def test_g_at_full_rank(cfg_2433):
    expected = Q("2.6") / 3 + Q("3.6") / 4 - Q("0.6")
    assert g_of_r(cfg_2433, "0.6", 0) == expected


def test_g_with_silent_interferer(cfg_2232):
    assert g_of_r(cfg_2232, "1.4", 2) == 1


@pytest.mark.parametrize("counts", [(2, 2, 3, 2), (2, 4, 3, 3), (1, 3, 2, 2)])
def test_g_without_interference_decreases_in_rank_deficit(counts):
    cfg = AntennaConfig(*counts)
    sweep = rank_sweep(cfg, 0)
    for r, g in sweep.values:
        expected = (
            f(cfg.n1, (1, cfg.m1), (0, cfg.m2 - r)) / cfg.q
            + Fraction(min(cfg.m2 - r, cfg.n2), cfg.p)
        )
        assert g == expected
    assert sweep.is_non_increasing()


def test_g_rejects_rank_deficits_out_of_range(cfg_2232):
    with pytest.raises(ValueError):
        g_of_r(cfg_2232, 1, 3)


@pytest.mark.parametrize("counts, alpha", [((2, 4, 3, 3), "0.6"), ((1, 6, 2, 3), "2.2")])
def test_argmax_is_full_rank(counts, alpha):
    r_star, sweep = argmax_g(AntennaConfig(*counts), alpha)
    assert r_star == 0
    assert not sweep.violations


def test_ties_are_reported():
    r_star, sweep = argmax_g(AntennaConfig(1, 6, 2, 3), "2.2")
    assert r_star == 0
    assert 1 in sweep.ties


def test_decomposition_at_full_rank(cfg_2433):
    pieces = loss_decomposition(cfg_2433, "0.6", 0)
    assert pieces.l2 == 0
    assert pieces.l3 == 0
    assert pieces.x == g_of_r(cfg_2433, "0.6", 0)


@pytest.mark.parametrize("alpha", ["0", "0.25", "0.5", "1"])
@pytest.mark.parametrize("r", [0, 1, 2])
def test_loss_gap_when_m2_at_most_both_receivers(alpha, r):
    cfg = AntennaConfig(2, 2, 3, 2)
    x, l2, l3 = loss_decomposition(cfg, alpha, r)
    assert l3 - l2 == (Q(alpha) - 1) * r / cfg.m2


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_decomposition_with_more_transmit_than_receive_antennas(r):
    cfg = AntennaConfig(2, 3, 2, 2)
    pieces = loss_decomposition(cfg, "0.75", r)
    assert pieces.g == g_of_r(cfg, "0.75", r)
    assert pieces.l3 <= pieces.l2
    assert pieces.l2_case.startswith("M2>N2")
    assert pieces.l3_case.startswith("M2>N1")


def test_decomposition_is_weak_only(cfg_2232):
    with pytest.raises(RegimeError):
        loss_decomposition(cfg_2232, "1.2", 0)


@pytest.mark.parametrize("counts", [(2, 6, 3, 2), (1, 8, 2, 3), (3, 7, 1, 2)])
@pytest.mark.parametrize("alpha", ["0.3", "0.75", "1"])
def test_capping_m2_shifts_the_rank_deficit(counts, alpha):
    cfg = AntennaConfig(*counts)
    capped = canonicalize(cfg)
    excess = cfg.m2 - capped.m2
    for r in range(cfg.m2 + 1):
        assert g_of_r(cfg, alpha, r) == g_of_r(capped, alpha, max(0, r - excess))
        assert loss_decomposition(cfg, alpha, r).g == g_of_r(cfg, alpha, r)


counts = st.integers(min_value=1, max_value=6)
weak_alpha = st.integers(min_value=0, max_value=8).map(lambda k: Fraction(k, 8))
any_alpha = st.integers(min_value=0, max_value=24).map(lambda k: Fraction(k, 8))


@settings(max_examples=150, deadline=None)
@given(m1=counts, m2=st.integers(min_value=1, max_value=8), n1=counts, n2=counts, alpha=any_alpha)
def test_full_rank_maximizes_g(m1, m2, n1, n2, alpha):
    r_star, _ = argmax_g(AntennaConfig(m1, m2, n1, n2), alpha)
    assert r_star == 0


@settings(max_examples=150, deadline=None)
@given(m1=counts, m2=st.integers(min_value=1, max_value=8), n1=counts, n2=counts, alpha=weak_alpha, data=st.data())
def test_decomposition_identity(m1, m2, n1, n2, alpha, data):
    cfg = AntennaConfig(m1, m2, n1, n2)
    r = data.draw(st.integers(min_value=0, max_value=m2))
    pieces = loss_decomposition(cfg, alpha, r)
    assert pieces.x + pieces.l3 - pieces.l2 == g_of_r(cfg, alpha, r)
    assert pieces.l3 <= pieces.l2
