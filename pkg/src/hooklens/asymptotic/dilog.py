"""Complex dilogarithm Li2(z) on the principal branch (cut along [1, inf)).

Power series for |z| <= 1/2; elsewhere the argument is moved into
{|z| <= 1, Re z <= 1/2} by inversion and reflection, then summed with the
Bernoulli-number series in u = -Log(1 - z), which converges fast there
(|u| < 2 pi) and covers the points near exp(+-i pi/3) that no Moebius image
brings inside |z| <= 1/2.
"""

from __future__ import annotations

import cmath
import math

from hooklens.asymptotic.bernoulli import bernoulli_number

PI2_6 = math.pi**2 / 6

# B_{2k} / (2k+1)! for the series Li2 = u - u^2/4 + sum_k B_{2k} u^(2k+1)/(2k+1)!
_BERN_COEFFS = tuple(
    float(bernoulli_number(2 * k)) / math.factorial(2 * k + 1) for k in range(1, 25)
)


class BranchCutError(ValueError):
    """Argument lies on a branch cut of the principal branch."""


def _li2_series(z: complex) -> complex:
    total = 0j
    term = z
    k = 1
    while True:
        inc = term / (k * k)
        total += inc
        if abs(inc) < 1e-18 * max(abs(total), 1e-300):
            return total
        k += 1
        term *= z


def _li2_bernoulli(z: complex) -> complex:
    u = -cmath.log(1 - z)
    u2 = u * u
    total = u - u2 / 4
    power = u
    for c in _BERN_COEFFS:
        power *= u2
        inc = c * power
        total += inc
        if abs(inc) < 1e-18 * abs(total):
            break
    return total


def _li2_reduced(z: complex) -> complex:
    """Li2 for |z| <= 1, Re z <= 1/2."""
    if abs(z) <= 0.5:
        return _li2_series(z)
    return _li2_bernoulli(z)


def _li2_unit_disc(z: complex) -> complex:
    if z.real <= 0.5:
        return _li2_reduced(z)
    # Li2(z) = pi^2/6 - Log(z) Log(1-z) - Li2(1-z)
    return PI2_6 - cmath.log(z) * cmath.log(1 - z) - _li2_reduced(1 - z)


def dilogarithm(z: complex) -> complex:
    """Principal-branch Li2(z) to about 15 significant digits.

    Raises :class:`BranchCutError` for real z > 1. ``z = 1`` returns pi^2/6.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real > 1.0:
        raise BranchCutError(f"Li2 is discontinuous across [1, inf); got z = {z.real}")
    if z == 1:
        return complex(PI2_6)
    if z == 0:
        return 0j
    if abs(z) <= 1.0:
        return _li2_unit_disc(z)
    # Li2(z) = -pi^2/6 - Log(-z)^2 / 2 - Li2(1/z)   (z not in [1, inf))
    return -PI2_6 - 0.5 * cmath.log(-z) ** 2 - _li2_unit_disc(1 / z)


def dilogarithm_real_part(x: float) -> float:
    """Re Li2(x) for real x, including x > 1 where the principal value is one-sided."""
    x = float(x)
    if x <= 1.0:
        return dilogarithm(x).real
    # Re Li2(x) = pi^2/3 - log(x)^2 / 2 - Li2(1/x)  for x > 1
    return 2 * PI2_6 - 0.5 * math.log(x) ** 2 - dilogarithm(1 / x).real
