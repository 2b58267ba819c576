"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""

import cmath
import json
import math

import numpy as np
import pytest

from conftest import record_criterion
from hooklens.asymptotic.arcs import f_xi_function, hook_arc_integral, root_of_unity
from hooklens.asymptotic.equidist import rate_check
from hooklens.asymptotic.euler_maclaurin import euler_maclaurin_expansion, exp_benchmark_order
from hooklens.asymptotic.partition_gf import partition_gf_major_arc
from hooklens.asymptotic.wright import HARDY_RAMANUJAN, hardy_ramanujan, wright_estimate
from hooklens.inequalities import IntegerSequenceWindow, conjecture_report, inequality_scans
from hooklens.partitions import hook_count_poly_oracle, partition_number, partition_numbers, residue_count_oracle
from hooklens.series import han_series, residue_filter_exact

# frozen from the computed n <= 400 tables (worst observed: ratio 0.273, slope -1.047)
RATE_MEDIAN_RATIO = 0.5
RATE_SLOPE = -0.5


def test_criterion_1_han_identity():
    bad = []
    for ell in range(1, 6):
        series = han_series(ell, 40)
        bad += [(ell, n) for n in range(41) if series[n] != hook_count_poly_oracle(ell, n)]
    record_criterion(1, "Han identity", not bad, f"mismatches={bad[:5]}")
    assert not bad


def test_criterion_2_filter_identity():
    pn = list(partition_numbers(400))
    oracle_bad, mass_bad = [], []
    for ell in (1, 2, 3):
        series = han_series(ell, 400)
        for b in range(2, 7):
            cols = [residue_filter_exact(series, b, a) for a in range(b)]
            for a in range(b):
                oracle_bad += [(ell, b, a, n) for n in range(41)
                               if cols[a][n] != residue_count_oracle(ell, b, a, n)]
            if [sum(c) for c in zip(*cols)] != pn:
                mass_bad.append((ell, b))
    ok = not oracle_bad and not mass_bad
    record_criterion(2, "filter identity", ok, f"oracle mismatches={oracle_bad[:5]} mass mismatches={mass_bad}")
    assert ok


def test_criterion_3_equidistribution_rate():
    results = []
    for ell in (1, 2, 3):
        series = han_series(ell, 400)
        for b in (2, 3, 5):
            results.append(rate_check(series, b))
    failing = [
        (r["ell"], r["b"]) for r in results
        if not (r["passed"]
                and r["late_median"] <= RATE_MEDIAN_RATIO * r["early_median"]
                and r["slope"] <= RATE_SLOPE)
    ]
    worst_slope = max(r["slope"] for r in results)
    worst_ratio = max(r["late_median"] / r["early_median"] for r in results)
    record_criterion(3, "equidistribution rate", not failing,
                     f"worst slope={worst_slope:.3f} worst median ratio={worst_ratio:.3f} failing={failing}")
    assert not failing


def test_criterion_4_hardy_ramanujan():
    ns = (50, 100, 200, 500)
    errs = [abs(wright_estimate(HARDY_RAMANUJAN, n) / partition_number(n) - 1) for n in ns]
    bounded = all(e <= 1.5 / math.sqrt(n) for e, n in zip(errs, ns))
    decreasing = all(x > y for x, y in zip(errs, errs[1:]))
    at_100 = abs(errs[1] - 4.6e-2) < 5e-4
    identity = max(abs(wright_estimate(HARDY_RAMANUJAN, n) / hardy_ramanujan(n) - 1) for n in (10, 100, 1000))
    ok = bounded and decreasing and at_100 and identity <= 1e-12
    record_criterion(4, "Hardy-Ramanujan via Wright", ok,
                     f"errors={[f'{e:.4f}' for e in errs]} identity gap={identity:.1e}")
    assert ok


def test_criterion_5_modular_transformation():
    worst = 0.0
    for x in np.linspace(0.05, 0.5, 19):
        for frac in np.linspace(-1, 1, 21):
            worst = max(worst, partition_gf_major_arc(complex(x, frac * x)).relative_difference)
    record_criterion(5, "modular transformation", worst <= 1e-10, f"max relative difference={worst:.2e}")
    assert worst <= 1e-10


def test_criterion_6_euler_maclaurin():
    slopes = {}
    for order in (1, 2, 3, 4):
        for angle in (0.0, math.pi / 6):
            slopes[(order, angle)] = exp_benchmark_order(order, angle)[0]
    order_ok = all(s >= n - 0.5 for (n, _), s in slopes.items())
    worst_const = 0.0
    for ell in (1, 2, 3):
        for xi in (1j, cmath.exp(2j * math.pi / 3), cmath.exp(-2j * math.pi / 3)):
            em = euler_maclaurin_expansion(f_xi_function(xi, ell), 1, 1)
            worst_const = max(worst_const, abs(ell * complex(em.corrections[0]) + ell * cmath.log(xi) / 2))
    ok = order_ok and worst_const <= 1e-10
    record_criterion(6, "Euler-Maclaurin order", ok,
                     f"min slope margin={min(s - n + 0.5 for (n, _), s in slopes.items()):.3f} "
                     f"constant-term gap={worst_const:.1e}")
    assert ok


def test_criterion_7_arc_negativity():
    worst_real, worst_gap, count = -math.inf, 0.0, 0
    for ell in range(1, 7):
        for b in range(2, 25):
            for k in range(1, b):
                arc = hook_arc_integral(root_of_unity(k, b), ell)
                count += 1
                worst_real = max(worst_real, arc.value.real)
                if arc.method != "principal-value":
                    worst_gap = max(worst_gap, arc.discrepancy)
    minus_one = abs(hook_arc_integral(-1, 1).value.real + math.pi**2 / 4)
    ok = worst_real < 0 and worst_gap <= 1e-10 and minus_one <= 1e-8
    record_criterion(7, "arc negativity", ok,
                     f"{count} arcs, max Re={worst_real:.3e}, closed-form gap={worst_gap:.1e}, "
                     f"xi=-1 gap={minus_one:.1e}")
    assert ok


def test_criterion_8_inequality_thresholds():
    ceiling, pair_ceiling = 500, 250
    sequences = [(IntegerSequenceWindow("p(n)", 0, partition_numbers(ceiling + 2)), {})]
    for ell in (1, 2, 3):
        series = han_series(ell, ceiling + 2)
        for b in range(2, 6):
            for a in range(b):
                values = residue_filter_exact(series, b, a)
                sequences.append((IntegerSequenceWindow(f"h_{ell}({a},{b};n)", 0, values),
                                  {"ell": ell, "b": b, "a": a}))
    missing = []
    p_d2 = None
    for window, params in sequences:
        for report in inequality_scans(window, ceiling, pair_ceiling, parameters=params):
            if window.label == "p(n)" and report.predicate == "jensen_d2":
                p_d2 = report.threshold
            if report.threshold is None:
                missing.append(f"{window.label}:{report.predicate}")
    ok = not missing and p_d2 == 26
    record_criterion(8, "Turan/Laguerre/multiplicative thresholds", ok,
                     f"p(n) d=2 threshold={p_d2}; {len(missing)} predicates without a threshold "
                     f"by n={ceiling}: {missing[:6]}{' ...' if len(missing) > 6 else ''}")
    assert ok


def test_criterion_9_conjecture_reports(tmp_path):
    polys = {}
    for ell in range(1, 6):
        series = han_series(ell, 40)
        polys.update({(ell, n): series[n] for n in range(1, 41)})
    report = conjecture_report(polys)
    out = tmp_path / "conjectures.json"
    out.write_text(json.dumps([vars(v) for v in report], indent=2))
    emitted = len(json.loads(out.read_text())) == len(polys)
    roots_fail = sum(not v.roots_nonpositive for v in report)
    uni_fail = sum(not v.unimodal for v in report)
    record_criterion(9, "conjecture reports", emitted,
                     f"{len(report)} polynomials; root-location exceptions={roots_fail}, "
                     f"unimodality exceptions={uni_fail} (reported, not asserted)")
    assert emitted
