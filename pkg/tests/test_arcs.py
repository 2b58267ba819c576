import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from hooklens.asymptotic.arcs import (
    ArcDominationError,
    hook_arc_integral,
    f_xi_taylor,
    minor_arc_domination_report,
    root_of_unity,
)
from hooklens.asymptotic.dilog import BranchCutError


def test_roots_of_unity_are_exact_at_real_points():
    assert root_of_unity(0, 5) == 1
    assert root_of_unity(3, 6) == -1
    assert root_of_unity(1, 4) == pytest.approx(1j)


def test_taylor_examples():
    assert complex(f_xi_taylor(1j, 1, 1)[0]) == pytest.approx(1j * math.pi / 2)
    assert all(abs(c) == 0 for c in f_xi_taylor(1, 3, 5))
    assert complex(f_xi_taylor(cmath.exp(2j * math.pi / 3), 2, 1)[0]) == pytest.approx(2j * math.pi / 3)


@pytest.mark.parametrize("xi", [1j, cmath.exp(2j * math.pi / 5), cmath.exp(-2.5j)])
@pytest.mark.parametrize("ell", [1, 3])
def test_taylor_matches_mpmath_taylor(xi, ell):
    # independent: mpmath numerical differentiation at high precision
    with mp.workdps(40):
        f = lambda z: mp.log(1 + (mp.mpc(xi) - 1) * mp.exp(-ell * z))
        want = mp.taylor(f, 0, 5)
    got = f_xi_taylor(xi, ell, 6)
    for g, w in zip(got, want):
        assert abs(complex(g) - complex(w)) < 1e-12


def test_taylor_rejects_negative_reals_other_than_minus_one():
    with pytest.raises(BranchCutError):
        f_xi_taylor(-0.5, 1, 3)


def test_arc_integral_examples():
    assert hook_arc_integral(1, 4).value == 0
    arc = hook_arc_integral(1j, 1)
    assert arc.value.real == pytest.approx(-0.61685, abs=1e-5)
    assert arc.value == pytest.approx(complex(-mp.polylog(2, 1 - 1j)), abs=1e-12)
    minus = hook_arc_integral(-1, 1)
    assert abs(minus.value.real + math.pi**2 / 4) < 1e-8
    assert minus.value.imag == pytest.approx(math.pi * math.log(2))


def test_arc_integral_scales_as_one_over_ell():
    one = hook_arc_integral(cmath.exp(0.7j), 1).value
    for ell in (2, 5):
        assert hook_arc_integral(cmath.exp(0.7j), ell).value == pytest.approx(one / ell, abs=1e-14)


def test_real_part_closed_form():
    # Re(-Li2(1 - e^{i t})) = -t^2/4 for |t| <= pi
    for t in (0.3, 1.0, 2.0, 3.0, -2.5):
        want = -t * t / 4
        assert hook_arc_integral(cmath.exp(1j * t), 1).value.real == pytest.approx(want, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, math.pi - 0.01), st.integers(1, 6))
def test_conjugate_symmetry(t, ell):
    xi = cmath.exp(1j * t)
    a = hook_arc_integral(xi, ell).value
    b = hook_arc_integral(xi.conjugate(), ell).value
    assert b == pytest.approx(a.conjugate(), abs=1e-12)


def test_rejects_off_circle():
    with pytest.raises(ValueError):
        hook_arc_integral(0.5, 1)


def test_report_examples():
    r2 = minor_arc_domination_report(2, 1)
    assert len(r2.entries) == 1 and r2.entries[0].real == pytest.approx(-2.4674, abs=1e-4)
    r3 = minor_arc_domination_report(3, 1)
    assert r3.entries[0].real == pytest.approx(r3.entries[1].real, abs=1e-14)
    r12 = minor_arc_domination_report(12, 3)
    assert len(r12.entries) == 11 and r12.all_negative
    assert all(e.margin == pytest.approx(-3 * e.real) for e in r12.entries)
    assert r12.to_dict()["entries"][0]["xi"] == [r12.entries[0].xi.real, r12.entries[0].xi.imag]


def test_report_validation():
    with pytest.raises(ValueError):
        minor_arc_domination_report(1, 1)
    assert issubclass(ArcDominationError, AssertionError)
