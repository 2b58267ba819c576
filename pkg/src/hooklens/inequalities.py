"""Exact checks of Turan, Laguerre and multiplicative inequalities, plus root/unimodality reports.

Indexing convention: the check "at n" is centred on s(n). The classical
Turan inequality at n is s(n)^2 >= s(n-1) s(n+1); the Jensen polynomial of
degree d tested at n is J^{d,n-1}(X) = sum_k C(d,k) s(n-1+k) X^k, and the
order-m Laguerre expression at n is
L_m(n) = sum_{j=0}^{2m} (-1)^{j+m} C(2m,j) s(n-m+j) s(n+m-j).
With this convention p(n) is log-concave exactly from n = 26 on.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Sequence

from hooklens import sturm
from hooklens.zetapoly import ZetaPoly


class WindowTooShortError(IndexError):
    pass


@dataclass(frozen=True)
class IntegerSequenceWindow:
    label: str
    offset: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError(f"{self.label}: values must be nonnegative")
        object.__setattr__(self, "values", vals)

    @property
    def last(self) -> int:
        return self.offset + len(self.values) - 1

    def require(self, lo: int, hi: int) -> None:
        if lo < self.offset or hi > self.last:
            raise WindowTooShortError(
                f"{self.label}: need indices {lo}..{hi}, window covers {self.offset}..{self.last}"
            )

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n <= self.last:
            raise WindowTooShortError(f"{self.label}: index {n} outside {self.offset}..{self.last}")
        return self.values[n - self.offset]


def jensen_coefficients(s: IntegerSequenceWindow, d: int, n: int) -> list[int]:
    s.require(n - 1, n - 1 + d)
    return [comb(d, k) * s[n - 1 + k] for k in range(d + 1)]


def _quadratic_real_rooted(c0: int, c1: int, c2: int) -> bool:
    return c1 * c1 - 4 * c0 * c2 >= 0


def jensen_hyperbolicity_check(s: IntegerSequenceWindow, d: int, n: int) -> bool:
    """Whether J^{d,n-1} has only real roots (d in {2, 3}), by exact discriminants."""
    if d not in (2, 3):
        raise ValueError("only degrees 2 and 3 are supported")
    c = jensen_coefficients(s, d, n)
    if d == 2:
        return _quadratic_real_rooted(*c)
    c0, c1, c2, c3 = c
    if c3 == 0:
        return _quadratic_real_rooted(c0, c1, c2)
    disc = (
        18 * c3 * c2 * c1 * c0
        - 4 * c2**3 * c0
        + c2**2 * c1**2
        - 4 * c3 * c1**3
        - 27 * c3**2 * c0**2
    )
    return disc >= 0


def laguerre_value(s: IntegerSequenceWindow, m: int, n: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    s.require(n - m, n + m)
    return sum(
        (-1) ** (j + m) * comb(2 * m, j) * s[n - m + j] * s[n + m - j] for j in range(2 * m + 1)
    )


def discrete_laguerre_check(s: IntegerSequenceWindow, m: int, n: int) -> bool:
    return laguerre_value(s, m, n) >= 0


def multiplicative_gap_check(s: IntegerSequenceWindow, n1: int, n2: int) -> bool:
    s.require(min(n1, n2), n1 + n2)
    return s[n1] * s[n2] > s[n1 + n2]


def real_negative_roots_check(p: ZetaPoly | Sequence[int], strict: bool = False) -> bool:
    """True iff every complex root lies in (-inf, 0] (or (-inf, 0) when ``strict``).

    Exact: strips the zeta^k factor, then compares the Sturm count of distinct
    roots in (-inf, 0) with the degree of the squarefree part.
    """
    coeffs = list(p.coeffs if isinstance(p, ZetaPoly) else p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    k = 0
    while coeffs[k] == 0:
        k += 1
    if strict and k:
        return False
    core = coeffs[k:]
    if len(core) == 1:
        return True
    sqf = sturm.squarefree_part(core)
    # (lo, hi] = (-inf, 0]; 0 is not a root of core
    return sturm.count_real_roots(sqf, None, 0) == len(sqf) - 1


def unimodality_check(p: ZetaPoly | Sequence[int]) -> tuple[bool, int | None]:
    coeffs = list(p.coeffs if isinstance(p, ZetaPoly) else p)
    if any(c < 0 for c in coeffs):
        raise ValueError("unimodality is only defined here for nonnegative coefficients")
    if not any(coeffs):
        raise ValueError("zero polynomial")
    peak = coeffs.index(max(coeffs))
    rising = all(coeffs[i] <= coeffs[i + 1] for i in range(peak))
    falling = all(coeffs[i] >= coeffs[i + 1] for i in range(peak, len(coeffs) - 1))
    return (True, peak) if rising and falling else (False, None)


def evaluate_range(check: Callable[[int], bool], n_lo: int, n_hi: int, threads: int = 1) -> list[bool]:
    ns = range(n_lo, n_hi + 1)
    if threads <= 1:
        return [bool(check(n)) for n in ns]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return [bool(v) for v in pool.map(check, ns)]


def threshold_scan(check: Callable[[int], bool], n_lo: int, n_hi: int, threads: int = 1) -> int | None:
    """Smallest N0 in [n_lo, n_hi] with check(n) for every n in [N0, n_hi]; None if check(n_hi) fails."""
    if n_lo > n_hi:
        raise ValueError("empty range")
    verdicts = evaluate_range(check, n_lo, n_hi, threads)
    return _threshold_from_verdicts(verdicts, n_lo)


def _threshold_from_verdicts(verdicts: Sequence[bool], n_lo: int) -> int | None:
    if not verdicts[-1]:
        return None
    i = len(verdicts) - 1
    while i > 0 and verdicts[i - 1]:
        i -= 1
    return n_lo + i


@dataclass
class ScanReport:
    predicate: str
    parameters: dict
    threshold: int | None
    first_failures: list[int] = field(default_factory=list)
    ceiling: int = 0
    floor: int = 0

    @property
    def holds_to_ceiling(self) -> bool:
        return self.threshold is not None

    def to_dict(self) -> dict:
        return asdict(self)


def scan(
    name: str,
    check: Callable[[int], bool],
    n_lo: int,
    n_hi: int,
    parameters: dict | None = None,
    threads: int = 1,
    keep_failures: int = 10,
) -> ScanReport:
    verdicts = evaluate_range(check, n_lo, n_hi, threads)
    failures = [n_lo + i for i, ok in enumerate(verdicts) if not ok][:keep_failures]
    return ScanReport(
        predicate=name,
        parameters=dict(parameters or {}),
        threshold=_threshold_from_verdicts(verdicts, n_lo),
        first_failures=failures,
        ceiling=n_hi,
        floor=n_lo,
    )


def multiplicative_pairs_check(s: IntegerSequenceWindow, ceiling: int) -> Callable[[int], bool]:
    """check(n): s(n) s(m) > s(n+m) for all m in [n, ceiling].

    Holding for every n in [N0, ceiling] is the same as the gap holding on
    all pairs in [N0, ceiling]^2.
    """
    s.require(1, 2 * ceiling)

    def check(n: int) -> bool:
        return all(s[n] * s[m] > s[n + m] for m in range(n, ceiling + 1))

    return check


def inequality_scans(
    s: IntegerSequenceWindow,
    n_hi: int = 500,
    pair_ceiling: int = 250,
    threads: int = 1,
    parameters: dict | None = None,
) -> list[ScanReport]:
    """Turan (d = 2, 3), Laguerre (m = 1, 2) and multiplicative-gap scans for one sequence."""
    params = {"sequence": s.label, **(parameters or {})}
    reports = []
    for d in (2, 3):
        reports.append(
            scan(f"jensen_d{d}", lambda n, d=d: jensen_hyperbolicity_check(s, d, n),
                 s.offset + 1, n_hi, params, threads)
        )
    for m in (1, 2):
        reports.append(
            scan(f"laguerre_m{m}", lambda n, m=m: discrete_laguerre_check(s, m, n),
                 s.offset + m, n_hi, params, threads)
        )
    # index 0 is excluded: s(0) = 1 makes the strict inequality fail trivially
    reports.append(
        scan("multiplicative_gap", multiplicative_pairs_check(s, pair_ceiling),
             max(s.offset, 1), pair_ceiling, params, threads)
    )
    return reports


@dataclass
class ConjectureVerdict:
    ell: int
    n: int
    degree: int
    roots_nonpositive: bool  # all roots in (-inf, 0]
    roots_negative: bool  # all roots in (-inf, 0)
    unimodal: bool
    peak: int | None


def conjecture_report(polys: dict[tuple[int, int], ZetaPoly]) -> list[ConjectureVerdict]:
    """Root-location and unimodality verdicts for p_{ell,n}(zeta), keyed by (ell, n).

    These are reported, never asserted.
    """
    out = []
    for (ell, n), poly in sorted(polys.items()):
        uni, peak = unimodality_check(poly)
        out.append(
            ConjectureVerdict(
                ell=ell,
                n=n,
                degree=poly.degree,
                roots_nonpositive=real_negative_roots_check(poly),
                roots_negative=real_negative_roots_check(poly, strict=True),
                unimodal=uni,
                peak=peak,
            )
        )
    return out
