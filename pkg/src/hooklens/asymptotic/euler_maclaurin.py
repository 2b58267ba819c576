"""Shifted Euler-Maclaurin expansions of sum_{m>=0} f((m + a) w) as w -> 0."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath as mp
import numpy as np

from hooklens.asymptotic.bernoulli import bernoulli_polynomial

DEFAULT_DPS = 50


class QuadratureError(ArithmeticError):
    """Quadrature did not converge; usually the integrand decays too slowly."""


@dataclass(frozen=True)
class AnalyticFunction:
    """What the expansion needs to know about f.

    ``taylor(N)`` returns f^(n)(0)/n! for n < N; ``integral()`` returns
    the integral of f over [0, inf).
    """

    name: str
    taylor: Callable[[int], Sequence]
    integral: Callable[[], complex]
    func: Callable | None = None


@dataclass(frozen=True)
class EMExpansion:
    integral: mp.mpc
    corrections: tuple
    order: int
    shift: object

    def evaluate(self, w) -> mp.mpc:
        """I_F / w + sum_n e_n w^n."""
        w = mp.mpmathify(w)
        return self.integral / w + mp.fsum(e * w**n for n, e in enumerate(self.corrections))


def quad_half_line(func: Callable, dps: int = DEFAULT_DPS) -> mp.mpc:
    """Integral of ``func`` over [0, inf) by mpmath's tanh-sinh rule, with an error check."""
    with mp.workdps(dps):
        value, err = mp.quad(func, [0, 1, mp.inf], error=True)
        if not mp.isfinite(value) or err > mp.mpf(10) ** (-(dps // 2)):
            raise QuadratureError(f"quadrature error estimate {mp.nstr(err, 3)} too large")
        return mp.mpc(value)


def euler_maclaurin_expansion(
    f: AnalyticFunction, a, order: int, dps: int = DEFAULT_DPS
) -> EMExpansion:
    """Integral term and coefficients e_n = -B_{n+1}(a) f^(n)(0) / (n+1)!."""
    if order < 1:
        raise ValueError("order must be positive")
    with mp.workdps(dps):
        taylor = list(f.taylor(order))
        if len(taylor) < order:
            raise ValueError(f"{f.name}: need {order} Taylor coefficients, got {len(taylor)}")
        integral = mp.mpc(f.integral())
        corrections = []
        for n in range(order):
            # f^(n)(0)/(n+1)! = (f^(n)(0)/n!) / (n+1)
            bern = bernoulli_polynomial(n + 1, a)
            coeff = -mp.mpf(bern.numerator) / bern.denominator * mp.mpc(taylor[n]) / (n + 1)
            corrections.append(coeff)
    return EMExpansion(integral, tuple(corrections), order, a)


def _exp_taylor(order: int) -> list:
    return [mp.mpf(-1) ** n / mp.factorial(n) for n in range(order)]


EXP_DECAY = AnalyticFunction(
    name="exp(-x)",
    taylor=_exp_taylor,
    integral=lambda: quad_half_line(lambda x: mp.exp(-x)),
    func=lambda x: mp.exp(-x),
)


def exp_shifted_sum(w, a=1) -> mp.mpc:
    """Closed form of sum_{m>=0} exp(-(m + a) w) = exp(-a w) / (1 - exp(-w))."""
    w = mp.mpmathify(w)
    return mp.exp(-a * w) / (-mp.expm1(-w))


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log|y| against log x."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.abs(np.asarray(ys, dtype=float)))
    return float(np.polyfit(lx, ly, 1)[0])


def exp_benchmark_order(
    order: int,
    angle: float = 0.0,
    ts: Sequence[float] = (1e-1, 1e-2, 1e-3, 1e-4),
    a=1,
    dps: int = DEFAULT_DPS,
) -> tuple[float, list[float]]:
    """Empirical decay order of the remainder for f(x) = exp(-x) along w = t e^{i angle}.

    Returns the fitted slope and the remainder magnitudes.
    """
    with mp.workdps(dps):
        expansion = euler_maclaurin_expansion(EXP_DECAY, a, order, dps=dps)
        rems = []
        for t in ts:
            w = mp.mpf(t) * mp.expj(angle)
            rems.append(float(abs(exp_shifted_sum(w, a) - expansion.evaluate(w))))
    return loglog_slope(ts, rems), rems
