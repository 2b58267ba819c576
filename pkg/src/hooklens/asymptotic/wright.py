"""Coefficient asymptotics from a major-arc expansion z^B e^{A/z} sum_j alpha_j z^j.

c(n) ~ n^{-(2B+3)/4} e^{2 sqrt(A n)} sum_r p_r n^{-r/2},  p_r = sum_{j<=r} alpha_j c_{j,r-j},

c_{j,r} = (-1/(4 sqrt A))^r sqrt(A)^{j+B+1/2} / (2 sqrt pi)
          * Gamma(j+B+3/2+r) / (r! Gamma(j+B+3/2-r)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class WrightParams:
    A: float
    B: float
    alphas: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.A > 0:
            raise ValueError("A must be positive")
        if not self.alphas:
            raise ValueError("need at least alpha_0")
        object.__setattr__(self, "alphas", tuple(self.alphas))


HARDY_RAMANUJAN = WrightParams(math.pi**2 / 6, 0.5, (1 / math.sqrt(2 * math.pi),))


def _nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _gamma_sign(x: float) -> float:
    if x > 0:
        return 1.0
    return -1.0 if math.ceil(-x) % 2 else 1.0


def _gamma_ratio(x: float, r: int) -> float:
    """Gamma(x + r) / Gamma(x - r) for integer r >= 0.

    Uses log-gamma with explicit signs. At poles the ratio is the finite
    product (x - r)(x - r + 1)...(x + r - 1); in particular it is 0 when only
    the denominator has a pole.
    """
    if r == 0:
        return 1.0
    lo, hi = x - r, x + r
    if _nonpositive_integer(lo) or _nonpositive_integer(hi):
        out = 1.0
        for i in range(-r, r):
            out *= x + i
        return out
    return _gamma_sign(hi) * _gamma_sign(lo) * math.exp(math.lgamma(hi) - math.lgamma(lo))


def wright_cjr(A: float, B: float, j: int, r: int) -> float:
    if A <= 0:
        raise ValueError("A must be positive")
    if j < 0 or r < 0:
        raise ValueError("j and r must be nonnegative")
    x = j + B + 1.5
    sqrt_a = math.sqrt(A)
    prefactor = (-1 / (4 * sqrt_a)) ** r * sqrt_a ** (j + B + 0.5) / (2 * math.sqrt(math.pi))
    return prefactor * _gamma_ratio(x, r) / math.factorial(r)


@dataclass(frozen=True)
class WrightExpansion:
    params: WrightParams
    p: tuple[complex, ...]


def wright_expansion(params: WrightParams, order: int) -> WrightExpansion:
    if not 1 <= order <= len(params.alphas):
        raise ValueError(f"order must lie in [1, {len(params.alphas)}] for the given alphas")
    p = []
    for r in range(order):
        p.append(sum(params.alphas[j] * wright_cjr(params.A, params.B, j, r - j) for j in range(r + 1)))
    return WrightExpansion(params, tuple(p))


def log_wright_estimate(params: WrightParams, n: int, order: int = 1) -> complex:
    """Logarithm of the truncated estimate (avoids overflow for large n)."""
    if n < 1:
        raise ValueError("n must be positive")
    exp_ = wright_expansion(params, order)
    series = sum(pr * n ** (-r / 2) for r, pr in enumerate(exp_.p))
    return -(2 * params.B + 3) / 4 * math.log(n) + 2 * math.sqrt(params.A * n) + cmath.log(series)


def wright_estimate(params: WrightParams, n: int, order: int = 1) -> float:
    """n^{-(2B+3)/4} e^{2 sqrt(A n)} sum_{r<order} p_r n^{-r/2}, real part."""
    return cmath.exp(log_wright_estimate(params, n, order)).real


def hardy_ramanujan(n: int) -> float:
    """exp(pi sqrt(2n/3)) / (4 n sqrt 3), written out directly."""
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def relative_errors(estimates: Sequence[float], exact: Sequence[int]) -> list[float]:
    return [abs(e / x - 1) for e, x in zip(estimates, exact)]
