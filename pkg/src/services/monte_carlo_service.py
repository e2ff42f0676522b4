#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Monte Carlo Service for ZicGdof
Estimates the pre-log slope of finite-SNR log-det rate terms over an SNR
ladder with i.i.d. Rayleigh channels, for comparison with the symbolic f()
values.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import A2OutOfRangeError, NumericalFailure
from src.core.gdof import f, f_term
from src.core.types import AntennaConfig, Alpha, FTermSpec, positive_part, to_fraction

logger = logging.getLogger("ZicGdof.MonteCarloService")

DEFAULT_LADDER = (16, 20, 24, 28, 32, 36, 40)
DEFAULT_FIT_POINTS = 4
DEFAULT_SAMPLES = 200
MIN_SAMPLES = 50
METHODS = ("qr", "cholesky")


class RateTerm(str, Enum):
    """Log-det terms of the two-user MAC rate region behind the achievability conditions"""

    RC_AT_R1 = "rc_r1"
    RC_AT_R2 = "rc_r2"
    RC_PLUS_R1 = "rc_plus_r1"
    R2 = "r2"
    RC_PLUS_R2 = "rc_plus_r2"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            names = ", ".join(t.value for t in cls)
            raise ValueError(f"Unknown rate term {name!r}, expected one of {names}")


@dataclass(frozen=True)
class ChannelSample:
    """One Rayleigh draw: H11 is N1 x M1, H12 is N1 x M2, H22 is N2 x M2."""

    h11: np.ndarray
    h12: np.ndarray
    h22: np.ndarray


@dataclass
class SlopeEstimate:
    """Averaged log-det rates over an SNR ladder and the fitted pre-log"""

    label: str
    snr_exponents: List[float]
    mean_rates: List[float]
    point_stderrs: List[float]
    slope: float
    stderr: float
    prediction: Fraction
    samples_per_point: int
    fit_points: int
    seed: int
    common_random_numbers: bool = False
    details: dict = field(default_factory=dict)

    @property
    def tolerance(self) -> float:
        return max(0.05 * float(self.prediction), 0.05)

    @property
    def error(self) -> float:
        return abs(self.slope - float(self.prediction))

    def within_tolerance(self) -> bool:
        return self.error <= self.tolerance

    def to_dict(self):
        return {
            "term": self.label,
            "prediction": f"{self.prediction.numerator}/{self.prediction.denominator}",
            "slope": self.slope,
            "stderr": self.stderr,
            "ladder": list(self.snr_exponents),
            "samples": self.samples_per_point,
            "fit_points": self.fit_points,
            "seed": self.seed,
            "common_random_numbers": self.common_random_numbers,
            "mean_rates": list(self.mean_rates),
            "within_tolerance": self.within_tolerance(),
            **self.details,
        }


def _streams(seed: int, point_index: int, sample_index: int) -> Tuple[np.random.Generator, np.random.Generator]:
    """Independent real/imaginary streams fully determined by (seed, point, sample)."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(point_index, sample_index))
    real_seq, imag_seq = sequence.spawn(2)
    return np.random.Generator(np.random.Philox(real_seq)), np.random.Generator(np.random.Philox(imag_seq))


def complex_gaussian(real_rng: np.random.Generator, imag_rng: np.random.Generator, shape) -> np.ndarray:
    """i.i.d. CN(0, 1) entries"""
    return (real_rng.standard_normal(shape) + 1j * imag_rng.standard_normal(shape)) / np.sqrt(2)


def draw_matrices(seed: int, point_index: int, sample_index: int, shapes: Sequence[Tuple[int, int]]) -> List[np.ndarray]:
    real_rng, imag_rng = _streams(seed, point_index, sample_index)
    return [complex_gaussian(real_rng, imag_rng, shape) for shape in shapes]


def draw_channel_sample(cfg: AntennaConfig, seed: int, point_index: int = 0, sample_index: int = 0) -> ChannelSample:
    h11, h12, h22 = draw_matrices(
        seed, point_index, sample_index,
        [(cfg.n1, cfg.m1), (cfg.n1, cfg.m2), (cfg.n2, cfg.m2)],
    )
    return ChannelSample(h11=h11, h12=h12, h22=h22)


def snr_gain(exponent, log2_rho: float) -> float:
    """Amplitude rho^(exponent/2)"""
    return float(2.0 ** (float(exponent) * log2_rho / 2.0))


def logdet_gram(a: np.ndarray, method: str = "qr") -> float:
    """log2 det(I + A A^H).

    "qr" takes the triangular factor R of [A^H; I], for which R^H R = I + A A^H,
    so the matrix is never formed. "cholesky" forms it, symmetrizes it as
    (M + M^H)/2 and factorizes it directly.

    Raises:
        NumericalFailure: non-finite input or a failed factorization
    """
    rows = a.shape[0]
    if rows == 0:
        return 0.0
    if not np.all(np.isfinite(a)):
        raise NumericalFailure("Log-det argument has non-finite entries; lower the SNR ladder ceiling")

    if method == "qr":
        stacked = np.vstack([a.conj().T, np.eye(rows)])
        pivots = np.abs(np.diag(np.linalg.qr(stacked, mode="r")))
    elif method == "cholesky":
        gram = np.eye(rows) + a @ a.conj().T
        gram = (gram + gram.conj().T) / 2
        try:
            pivots = np.real(np.diag(np.linalg.cholesky(gram)))
        except np.linalg.LinAlgError as e:
            raise NumericalFailure(f"Log-det argument is not positive definite: {str(e)}") from e
    else:
        raise ValueError(f"Unknown factorization {method!r}, expected one of {', '.join(METHODS)}")

    if not np.all(np.isfinite(pivots)) or np.any(pivots <= 0):
        raise NumericalFailure("Factorization produced a non-positive pivot")
    return float(2.0 * np.sum(np.log2(pivots)))


def logdet_term(h1: np.ndarray, h2: np.ndarray, spec: FTermSpec, log2_rho: float, method: str = "qr") -> float:
    """log2 det(I_u + rho^a1 H1 H1^H + rho^a2 H2 H2^H) for H1: u x u1, H2: u x u2"""
    a = np.hstack([snr_gain(spec.a1, log2_rho) * h1, snr_gain(spec.a2, log2_rho) * h2])
    return logdet_gram(a, method)


def term_gram(term: RateTerm, sample: ChannelSample, alpha: Fraction, a2: Fraction, log2_rho: float) -> np.ndarray:
    """Matrix A whose log2 det(I + A A^H) is the named rate term at rho = 2^log2_rho"""
    g = lambda exponent: snr_gain(exponent, log2_rho)  # noqa: E731
    if term is RateTerm.RC_AT_R1:
        return g(alpha) * sample.h12
    if term is RateTerm.RC_AT_R2:
        return g(1) * sample.h22
    if term is RateTerm.RC_PLUS_R1:
        return np.hstack([g(1) * sample.h11, g(alpha) * sample.h12])
    if term is RateTerm.R2:
        return np.hstack([g(1 - a2) * sample.h22.conj().T, g(alpha - a2) * sample.h12.conj().T])
    if term is RateTerm.RC_PLUS_R2:
        # R2's signal stacked with the quantized interference; common and private inputs as columns
        n1, m2 = sample.h12.shape
        common = np.vstack([g(1) * sample.h22, np.zeros((n1, m2))])
        private = np.vstack([g(1 - a2) * sample.h22, g(alpha - a2) * sample.h12])
        return np.hstack([common, private])
    raise ValueError(f"Unsupported rate term {term!r}")


def term_prediction(term: RateTerm, cfg: AntennaConfig, alpha: Fraction, a2: Fraction) -> Fraction:
    """Symbolic pre-log of a rate term"""
    if term is RateTerm.RC_AT_R1:
        return f(cfg.n1, (alpha, cfg.m2), (0, 0))
    if term is RateTerm.RC_AT_R2:
        return f(cfg.n2, (1, cfg.m2), (0, 0))
    if term is RateTerm.RC_PLUS_R1:
        return f(cfg.n1, (alpha, cfg.m2), (1, cfg.m1))
    if term is RateTerm.R2:
        return f(cfg.m2, (1 - a2, cfg.n2), (alpha - a2, cfg.n1))
    if term is RateTerm.RC_PLUS_R2:
        return min(cfg.m2, cfg.n2) + positive_part(alpha - a2) * cfg.n1_prime
    raise ValueError(f"Unsupported rate term {term!r}")


def fit_slope(snr_exponents: Sequence[float], means: Sequence[float], stderrs: Sequence[float], top: int) -> Tuple[float, float]:
    """Least-squares slope of mean rate against log2(rho) on the top ladder points

    Returns:
        (slope, standard error propagated from the per-point standard errors)
    """
    if top < 2 or top > len(snr_exponents):
        raise ValueError(f"Cannot fit on {top} of {len(snr_exponents)} ladder points")
    x = np.asarray(snr_exponents[-top:], dtype=float)
    y = np.asarray(means[-top:], dtype=float)
    s = np.asarray(stderrs[-top:], dtype=float)
    slope, _ = np.polyfit(x, y, 1)
    centered = x - x.mean()
    sxx = float(np.sum(centered ** 2))
    stderr = float(np.sqrt(np.sum((centered * s) ** 2)) / sxx)
    return float(slope), stderr


class MonteCarloService:
    """
    Service class for finite-SNR slope estimation
    """

    def __init__(self, config_manager=None, seed=None, ladder=None, samples_per_point=None,
                 fit_points=None, method=None, workers=None):
        """
        Initialize the Monte Carlo service

        Args:
            config_manager (ConfigManager, optional): source of defaults (monte_carlo section)
            seed (int, optional): base seed
            ladder (sequence, optional): log2(rho) values, strictly increasing
            samples_per_point (int, optional): fresh channel draws per ladder point
            fit_points (int, optional): top ladder points used by the fit
            method (str, optional): "qr" or "cholesky"
            workers (int, optional): threads evaluating samples of one ladder point
        """
        def setting(value, key, default):
            if value is not None:
                return value
            if config_manager is not None:
                return config_manager.get_value("monte_carlo", key, default)
            return default

        self.seed = int(setting(seed, "seed", 0))
        self.ladder = [float(x) for x in setting(ladder, "ladder", DEFAULT_LADDER)]
        self.samples_per_point = int(setting(samples_per_point, "samples_per_point", DEFAULT_SAMPLES))
        self.fit_points = int(setting(fit_points, "fit_points", DEFAULT_FIT_POINTS))
        self.method = setting(method, "method", "qr")
        self.workers = max(1, int(setting(workers, "workers", 1)))
        self._validate()

    def _validate(self):
        if len(self.ladder) < 4:
            raise ValueError(f"SNR ladder needs at least 4 points, got {len(self.ladder)}")
        if any(b <= a for a, b in zip(self.ladder, self.ladder[1:])):
            raise ValueError(f"SNR ladder must be strictly increasing: {self.ladder}")
        if self.ladder[-1] > 48:
            logger.warning(f"Ladder top log2(rho)={self.ladder[-1]} is beyond the tested range")
        if self.samples_per_point < MIN_SAMPLES:
            raise ValueError(f"samples_per_point must be >= {MIN_SAMPLES}, got {self.samples_per_point}")
        if not 2 <= self.fit_points <= len(self.ladder):
            raise ValueError(f"fit_points must be in [2, {len(self.ladder)}], got {self.fit_points}")
        if self.method not in METHODS:
            raise ValueError(f"Unknown factorization {self.method!r}, expected one of {', '.join(METHODS)}")

    def _ladder_statistics(self, evaluate: Callable[[int, int, float], float], common_random_numbers: bool):
        """Mean and standard error of evaluate(point, sample, log2_rho) at every ladder point"""
        means, stderrs = [], []
        executor = ThreadPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            for point_index, log2_rho in enumerate(self.ladder):
                stream_point = 0 if common_random_numbers else point_index
                indices = range(self.samples_per_point)
                job = lambda i: evaluate(stream_point, i, log2_rho)  # noqa: E731
                values = list(executor.map(job, indices)) if executor else [job(i) for i in indices]
                rates = np.asarray(values, dtype=float)
                means.append(float(np.mean(rates)))
                stderrs.append(float(np.std(rates, ddof=1) / np.sqrt(len(rates))))
                logger.debug(f"log2(rho)={log2_rho}: mean rate {means[-1]:.4f} bits")
        finally:
            if executor:
                executor.shutdown()
        return means, stderrs

    def _estimate(self, label, prediction, evaluate, common_random_numbers, details):
        means, stderrs = self._ladder_statistics(evaluate, common_random_numbers)
        slope, stderr = fit_slope(self.ladder, means, stderrs, self.fit_points)
        estimate = SlopeEstimate(
            label=label,
            snr_exponents=list(self.ladder),
            mean_rates=means,
            point_stderrs=stderrs,
            slope=slope,
            stderr=stderr,
            prediction=prediction,
            samples_per_point=self.samples_per_point,
            fit_points=self.fit_points,
            seed=self.seed,
            common_random_numbers=common_random_numbers,
            details=details,
        )
        logger.info(f"{label}: slope {slope:.4f} +/- {stderr:.4f}, prediction {float(prediction):.4f}")
        return estimate

    def estimate_slope(self, cfg, term, alpha, a2=0, common_random_numbers=False):
        """
        Estimate the pre-log of a named rate term

        Args:
            cfg (AntennaConfig): antenna configuration
            term (RateTerm or str): which rate term
            alpha: interference exponent
            a2: power back-off of T2's private message, 0 <= a2 <= alpha
            common_random_numbers (bool): reuse the same draws at every ladder point

        Returns:
            SlopeEstimate
        """
        term = RateTerm.parse(term) if isinstance(term, str) else term
        alpha_value = Alpha.of(alpha).value
        a2 = to_fraction(a2)
        if not 0 <= a2 <= alpha_value:
            raise A2OutOfRangeError(a2, Fraction(0), alpha_value)

        def evaluate(point_index, sample_index, log2_rho):
            sample = draw_channel_sample(cfg, self.seed, point_index, sample_index)
            return logdet_gram(term_gram(term, sample, alpha_value, a2, log2_rho), self.method)

        details = {"config": list(cfg.as_tuple()), "alpha": str(alpha_value), "a2": str(a2)}
        return self._estimate(term.value, term_prediction(term, cfg, alpha_value, a2),
                              evaluate, common_random_numbers, details)

    def estimate_fterm_slope(self, spec, common_random_numbers=False):
        """
        Estimate the pre-log of log|I_u + rho^a1 H1 H1^H + rho^a2 H2 H2^H|

        Args:
            spec (FTermSpec): dimensions and exponents

        Returns:
            SlopeEstimate with prediction f_term(spec)
        """
        def evaluate(point_index, sample_index, log2_rho):
            h1, h2 = draw_matrices(self.seed, point_index, sample_index, [(spec.u, spec.u1), (spec.u, spec.u2)])
            return logdet_term(h1, h2, spec, log2_rho, self.method)

        label = f"f({spec.u},({spec.a1},{spec.u1}),({spec.a2},{spec.u2}))"
        return self._estimate(label, f_term(spec), evaluate, common_random_numbers, {})

    @staticmethod
    def refit(estimate, top):
        """Slope and standard error of an existing estimate using its top ladder points"""
        return fit_slope(estimate.snr_exponents, estimate.mean_rates, estimate.point_stderrs, top)

    def convergence_trials(self, cfg, term, alpha, a2=0, trials=10, top=3, common_random_numbers=True):
        """
        Fraction of seeded trials in which a top-k refit lands closer to the prediction
        than a fit on the full ladder

        Returns:
            float in [0, 1]
        """
        base_seed = self.seed
        closer = 0
        try:
            for trial in range(trials):
                self.seed = base_seed + trial
                estimate = self.estimate_slope(cfg, term, alpha, a2, common_random_numbers)
                full, _ = self.refit(estimate, len(self.ladder))
                near, _ = self.refit(estimate, top)
                prediction = float(estimate.prediction)
                if abs(near - prediction) < abs(full - prediction):
                    closer += 1
        finally:
            self.seed = base_seed
        return closer / trials
