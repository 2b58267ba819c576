"""Arc integrals I = int_0^inf Log(1 + (xi - 1) e^{-ell x}) dx and their signs.

For xi = exp(i theta) != 1 the numerator factor prod_n (1 + (xi-1) q^{ell n})^ell
behaves like exp(ell I / w) as q = e^{-w} -> 1, so Re(I) < 0 is what makes the
k != 0 terms of the roots-of-unity filter exponentially smaller than P(q).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field

import mpmath as mp
import numpy as np
from scipy import integrate

from hooklens.asymptotic.dilog import BranchCutError, dilogarithm, dilogarithm_real_part
from hooklens.asymptotic.euler_maclaurin import AnalyticFunction, QuadratureError

_UNIT_TOL = 1e-12


def root_of_unity(k: int, b: int) -> complex:
    if k % b == 0:
        return 1 + 0j
    if 2 * (k % b) == b:
        return -1 + 0j
    return cmath.exp(2j * math.pi * k / b)


def _is_minus_one(xi: complex) -> bool:
    return abs(xi + 1) < _UNIT_TOL


def _is_one(xi: complex) -> bool:
    return abs(xi - 1) < _UNIT_TOL


def _series_mul(a: list, b: list, order: int) -> list:
    out = [mp.mpc(0)] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j in range(order - i):
                out[i + j] += x * b[j]
    return out


def f_xi_taylor(xi: complex, ell: int, order: int, dps: int = 30) -> list:
    """Taylor coefficients at z = 0 of Log(1 + (xi - 1) e^{-ell z}).

    Built by composing the exponential series with the Mercator series, so
    coefficient 0 is Log(xi) exactly. For xi = -1 the absolute-value variant
    log|1 - 2 e^{-ell z}| = log(2 e^{-ell z} - 1) is returned instead (real,
    constant term 0), since Log(-1) sits on the branch cut.
    """
    if ell < 1 or order < 1:
        raise ValueError("ell and order must be positive")
    xi = complex(xi)
    with mp.workdps(dps):
        # e^{-ell z} - 1, without its (zero) constant term
        em1 = [mp.mpc(0)] + [mp.mpf(-ell) ** k / mp.factorial(k) for k in range(1, order)]
        if _is_minus_one(xi):
            base, slope = mp.mpc(1), mp.mpc(2)  # 2 e^{-ell z} - 1 = 1 + 2 (e^{-ell z} - 1)
        else:
            base, slope = mp.mpc(xi), mp.mpc(xi) - 1
            if base.imag == 0 and base.real <= 0:
                raise BranchCutError(f"Log is discontinuous at xi = {xi}")
        # Log(base + slope*E) = Log(base) + log(1 + v),  v = (slope/base) * E
        v = [slope / base * c for c in em1]
        out = [mp.log(base)] + [mp.mpc(0)] * (order - 1)
        power = [mp.mpc(1)] + [mp.mpc(0)] * (order - 1)
        for j in range(1, order):
            power = _series_mul(power, v, order)
            sign = 1 if j % 2 else -1
            for n in range(order):
                out[n] += sign * power[n] / j
        return out


@dataclass(frozen=True)
class ArcIntegral:
    xi: complex
    ell: int
    value: complex
    method: str  # "quadrature", "dilogarithm" or "principal-value"
    closed_form: complex | None = None

    @property
    def discrepancy(self) -> float | None:
        if self.closed_form is None:
            return None
        if self.method == "principal-value":
            return abs(self.value.real - self.closed_form.real)
        return abs(self.value - self.closed_form)


def _quad_unit_interval(xi: complex) -> complex:
    # int_0^inf Log(1 + (xi-1) e^{-x}) dx = int_0^1 Log(1 + (xi-1) u) / u du
    c = xi - 1

    def re(u):
        return (np.log1p(c * u) / u).real

    def im(u):
        return (np.log1p(c * u) / u).imag

    vals = []
    for part in (re, im):
        val, err, info = integrate.quad(part, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200, full_output=1)[:3]
        if err > 1e-11:
            raise QuadratureError(f"arc integral at xi={xi}: error estimate {err:.2e}")
        vals.append(val)
    return complex(vals[0], vals[1])


def _pv_minus_one(dps: int = 30) -> float:
    # int_0^1 log|1 - 2u| / u du, split at the log singularity u = 1/2 (tanh-sinh).
    with mp.workdps(dps):
        val, err = mp.quad(lambda u: mp.log(abs(1 - 2 * u)) / u, [0, 0.5, 1], error=True)
        if err > mp.mpf(10) ** (-(dps // 2)):
            raise QuadratureError(f"principal-value arc integral: error estimate {mp.nstr(err, 3)}")
        return float(val)


def hook_arc_integral(xi: complex, ell: int) -> ArcIntegral:
    """I_{f_xi} by quadrature on u = e^{-ell x}, with the closed form -Li2(1 - xi)/ell.

    For xi = -1 the real part is the (integrable) log-singular integral of
    log|1 - 2 e^{-ell x}|; the imaginary part of the principal Log there is
    pi on x < log(2)/ell, giving pi log(2)/ell.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    xi = complex(xi)
    if abs(abs(xi) - 1) > 1e-9:
        raise ValueError(f"xi must lie on the unit circle, |xi| = {abs(xi)}")
    if _is_one(xi):
        return ArcIntegral(xi, ell, 0j, "quadrature", 0j)
    if _is_minus_one(xi):
        re = _pv_minus_one() / ell
        value = complex(re, math.pi * math.log(2) / ell)
        closed = complex(-dilogarithm_real_part(2.0) / ell, math.pi * math.log(2) / ell)
        return ArcIntegral(xi, ell, value, "principal-value", closed)
    value = _quad_unit_interval(xi) / ell
    closed = -dilogarithm(1 - xi) / ell
    return ArcIntegral(xi, ell, value, "quadrature", closed)


def f_xi_function(xi: complex, ell: int) -> AnalyticFunction:
    """f_xi as an Euler-Maclaurin input (Taylor data plus arc quadrature)."""
    return AnalyticFunction(
        name=f"Log(1+({xi}-1)exp(-{ell}x))",
        taylor=lambda order: f_xi_taylor(xi, ell, order),
        integral=lambda: hook_arc_integral(xi, ell).value,
    )


class ArcDominationError(AssertionError):
    """Some arc integral has nonnegative real part."""


@dataclass
class ArcEntry:
    k: int
    xi: complex
    real: float
    imag: float
    margin: float  # -Re(ell * I): the exponential gap over the k = 0 term
    closed_form_gap: float | None


@dataclass
class ArcReport:
    b: int
    ell: int
    entries: list[ArcEntry] = field(default_factory=list)

    @property
    def all_negative(self) -> bool:
        return all(e.real < 0 for e in self.entries)

    def to_dict(self) -> dict:
        out = {"b": self.b, "ell": self.ell, "all_negative": self.all_negative, "entries": []}
        for e in self.entries:
            d = asdict(e)
            d["xi"] = [e.xi.real, e.xi.imag]
            out["entries"].append(d)
        return out


def minor_arc_domination_report(b: int, ell: int, strict: bool = True) -> ArcReport:
    """Re(I_{f_xi}) for xi = zeta_b^k, k = 1..b-1; raises if any is >= 0 (unless not strict)."""
    if b < 2:
        raise ValueError("modulus b must be at least 2")
    report = ArcReport(b, ell)
    for k in range(1, b):
        arc = hook_arc_integral(root_of_unity(k, b), ell)
        report.entries.append(
            ArcEntry(
                k=k,
                xi=arc.xi,
                real=arc.value.real,
                imag=arc.value.imag,
                margin=-ell * arc.value.real,
                closed_form_gap=arc.discrepancy,
            )
        )
    if strict and not report.all_negative:
        bad = [e.k for e in report.entries if e.real >= 0]
        raise ArcDominationError(f"nonnegative Re(I) for b={b}, ell={ell}, k={bad}")
    return report
