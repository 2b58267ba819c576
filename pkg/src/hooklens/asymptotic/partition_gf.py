"""P(q) = 1/(q; q)_inf near q = 1: the modular transformation and the minor-arc envelope."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

_TAIL = 1e-18


def log_euler_product(z: complex) -> complex:
    """log of 1/(e^{-z}; e^{-z})_inf = -sum_n log(1 - e^{-n z}), Re z > 0."""
    z = complex(z)
    if z.real <= 0:
        raise ValueError("need Re z > 0")
    # |e^{-nz}| < _TAIL once n > log(1/_TAIL) / Re z
    terms = int(math.ceil(-math.log(_TAIL) / z.real)) + 1
    n = np.arange(1, terms + 1)
    qn = np.exp(-n * z)
    return complex(-np.sum(np.log1p(-qn)))


@dataclass(frozen=True)
class MajorArcPair:
    z: complex
    log_direct: complex
    log_transformed: complex

    @property
    def direct(self) -> mp.mpc:
        return mp.exp(mp.mpc(self.log_direct))

    @property
    def transformed(self) -> mp.mpc:
        return mp.exp(mp.mpc(self.log_transformed))

    @property
    def relative_difference(self) -> float:
        return abs(cmath.exp(self.log_transformed - self.log_direct) - 1)


def partition_gf_major_arc(z: complex) -> MajorArcPair:
    """Both sides of the eta transformation for P(e^{-z}), kept in log form.

    direct:      1/(e^{-z}; e^{-z})_inf
    transformed: (z/2pi)^{1/2} exp(pi/12 (2pi/z - z/2pi)) / (e^{-4pi^2/z}; e^{-4pi^2/z})_inf
    """
    z = complex(z)
    if z.real <= 0:
        raise ValueError("need Re z > 0")
    tau = 2 * math.pi
    direct = log_euler_product(z)
    dual = 4 * math.pi**2 / z
    transformed = 0.5 * cmath.log(z / tau) + math.pi / 12 * (tau / z - z / tau)
    transformed += log_euler_product(dual)
    return MajorArcPair(z, direct, transformed)


def minor_arc_rate(M: float) -> float:
    """pi/12 - (1 - 1/sqrt(1 + M^2)) / (2 pi)."""
    if M <= 0:
        raise ValueError("M must be positive")
    return math.pi / 12 - (1 - 1 / math.sqrt(1 + M * M)) / (2 * math.pi)


def minor_arc_bound(M: float, v: float) -> float:
    """sqrt(v) exp(rate(M) / v), the envelope for |P(q)| with q = e^{2 pi i (u + i v)}, M v <= |u| <= 1/2."""
    if v <= 0:
        raise ValueError("v must be positive")
    return math.sqrt(v) * math.exp(minor_arc_rate(M) / v)


def log_abs_partition_gf(u: float, v: float) -> float:
    """log |P(q)| at q = exp(2 pi i (u + i v))."""
    return log_euler_product(2 * math.pi * complex(v, -u)).real


def minor_arc_sup_ratio(M: float, v: float, samples: int = 400) -> float:
    """max over a u-grid on [M v, 1/2] of |P(q)| / minor_arc_bound(M, v)."""
    us = np.linspace(M * v, 0.5, samples)
    log_bound = 0.5 * math.log(v) + minor_arc_rate(M) / v
    worst = max(log_abs_partition_gf(float(u), v) for u in us)
    return math.exp(worst - log_bound)
