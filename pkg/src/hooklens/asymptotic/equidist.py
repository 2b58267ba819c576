"""How close the residue-class counts h_ell(a, b; n) are to p(n)/b."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Sequence

from hooklens.asymptotic.euler_maclaurin import loglog_slope
from hooklens.partitions import partition_numbers
from hooklens.series import HookSeries, han_series, residue_filter_exact

CSV_HEADER = ("n", "a", "exact", "main_term", "rel_error")


@dataclass(frozen=True)
class EquidistRow:
    n: int
    a: int
    exact: int
    main_term: Fraction
    rel_error: float


@dataclass
class EquidistTable:
    ell: int
    b: int
    n_max: int
    rows: list[EquidistRow] = field(default_factory=list)
    slope: float | None = None
    slope_window: tuple[int, int] | None = None

    def max_errors(self) -> list[float]:
        """max_a |b h(a,b;n)/p(n) - 1| for n = 0..n_max."""
        out = [0.0] * (self.n_max + 1)
        for row in self.rows:
            out[row.n] = max(out[row.n], row.rel_error)
        return out

    def write_csv(self, fp: IO[str]) -> None:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow([r.n, r.a, r.exact, repr(float(r.main_term)), repr(r.rel_error)])

    def summary(self, tolerances: dict | None = None) -> dict:
        errs = self.max_errors()
        return {
            "ell": self.ell,
            "b": self.b,
            "n_max": self.n_max,
            "slope": self.slope,
            "slope_window": list(self.slope_window) if self.slope_window else None,
            "max_error_at_n_max": errs[-1],
            "tolerances": dict(tolerances or {}),
        }

    def write_json(self, fp: IO[str], tolerances: dict | None = None) -> None:
        json.dump(self.summary(tolerances), fp, indent=2, sort_keys=True)
        fp.write("\n")


def max_relative_errors(series: HookSeries, b: int, n_max: int | None = None) -> list[float]:
    """E(n) = max_a |b h(a,b;n)/p(n) - 1| computed exactly, returned as floats."""
    n_max = series.order if n_max is None else n_max
    if b == 1:
        return [0.0] * (n_max + 1)
    pn = partition_numbers(n_max)
    filtered = [residue_filter_exact(series, b, a) for a in range(b)]
    return [
        float(max(abs(Fraction(b * filtered[a][n], pn[n]) - 1) for a in range(b)))
        for n in range(n_max + 1)
    ]


def fitted_slope(errors: Sequence[float], lo: int, hi: int) -> float | None:
    """Least-squares slope of log E(n) against log n on [lo, hi], skipping exact zeros."""
    pts = [(n, errors[n]) for n in range(max(lo, 1), hi + 1) if errors[n] > 0]
    if len(pts) < 2:
        return None
    ns, es = zip(*pts)
    return loglog_slope(ns, es)


def equidistribution_error_table(
    ell: int, b: int, n_max: int, series: HookSeries | None = None
) -> EquidistTable:
    if b < 1:
        raise ValueError("modulus b must be at least 1")
    if series is None:
        series = han_series(ell, max(n_max, 1))
    elif series.ell != ell or series.order < n_max:
        raise ValueError("series does not match ell or is too short")
    pn = partition_numbers(n_max)
    if b == 1:
        columns = [[pn[n] for n in range(n_max + 1)]]
    else:
        columns = [residue_filter_exact(series, b, a)[: n_max + 1] for a in range(b)]
    table = EquidistTable(ell, b, n_max)
    for n in range(n_max + 1):
        main = Fraction(pn[n], b)
        for a in range(b):
            exact = columns[a][n]
            err = float(abs(exact / main - 1))
            table.rows.append(EquidistRow(n, a, exact, main, err))
    lo = n_max // 2
    table.slope = fitted_slope(table.max_errors(), lo, n_max)
    table.slope_window = (lo, n_max)
    return table


def median(values: Sequence[float]) -> float:
    s = sorted(values)
    mid = len(s) // 2
    return s[mid] if len(s) % 2 else 0.5 * (s[mid - 1] + s[mid])


def rate_check(series: HookSeries, b: int, early=(50, 100), late=(350, 400), fit=(200, 400)) -> dict:
    """Median of E(n) early vs late, and the fitted log-log slope over ``fit``."""
    errs = max_relative_errors(series, b, max(late[1], fit[1]))
    early_med = median(errs[early[0] : early[1] + 1])
    late_med = median(errs[late[0] : late[1] + 1])
    slope = fitted_slope(errs, *fit)
    return {
        "ell": series.ell,
        "b": b,
        "early_median": early_med,
        "late_median": late_med,
        "slope": slope,
        "passed": late_med < early_med and slope is not None and slope < 0 and math.isfinite(slope),
    }
