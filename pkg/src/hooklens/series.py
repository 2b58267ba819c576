"""Truncated q-series with ZetaPoly coefficients and the roots-of-unity filter.

The generating function

    H(zeta; q) = prod_{n>=1} (1 + (zeta - 1) q^(ell n))^ell / (1 - q^n)

is expanded exactly up to q^N. Internally each ZetaPoly coefficient is packed
into one Python integer by evaluating it at zeta = 2^K (Kronecker
substitution). This is a ring homomorphism, so every intermediate step is
exact; K is chosen wide enough that the final, nonnegative coefficients
(each at most p(N)) unpack without carries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterable

import numpy as np

from hooklens.partitions import partition_numbers
from hooklens.zetapoly import ZetaPoly

__all__ = [
    "DEFAULT_ORDER",
    "DEFAULT_MEMORY_BUDGET",
    "HookSeries",
    "FilterImaginaryPartError",
    "estimate_memory_bytes",
    "han_series",
    "residue_filter_exact",
    "residue_filter_complex",
    "write_table",
    "read_table",
]

DEFAULT_ORDER = 400
DEFAULT_MEMORY_BUDGET = 2 << 30  # bytes
IMAG_TOLERANCE = 1e-6
REAL = np.longdouble
COMPLEX = np.clongdouble


class FilterImaginaryPartError(ArithmeticError):
    """The floating roots-of-unity filter left a non-negligible imaginary part."""


@dataclass(frozen=True)
class HookSeries:
    ell: int
    order: int
    coeffs: tuple[ZetaPoly, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    def __getitem__(self, n: int) -> ZetaPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def at_one(self) -> list[int]:
        """Coefficients at zeta = 1, i.e. p(0), ..., p(order)."""
        return [sum(c.coeffs) for c in self.coeffs]

    def truncate(self, order: int) -> "HookSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return HookSeries(self.ell, order, self.coeffs[: order + 1])


def _slot_bytes(order: int) -> int:
    # Every coefficient of the q^n term is at most p(n) <= p(order).
    return (partition_numbers(order)[-1].bit_length() + 7) // 8


def estimate_memory_bytes(order: int) -> int:
    """Rough peak memory of :func:`han_series` at truncation ``order``.

    Packed integers take about (n + 1) * slot bytes each; the unpacked table
    costs one Python int (~32 bytes + payload) per coefficient.
    """
    slot = _slot_bytes(order)
    cells = (order + 1) * (order + 2) // 2
    return cells * slot + cells * (32 + slot)


def han_series(ell: int, order: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> HookSeries:
    if ell < 1:
        raise ValueError("ell must be positive")
    if order < 1:
        raise ValueError("order must be positive")
    need = estimate_memory_bytes(order)
    if need > memory_budget:
        raise MemoryError(
            f"order {order} needs about {need / 2**20:.0f} MiB, "
            f"over the budget of {memory_budget / 2**20:.0f} MiB"
        )

    slot = _slot_bytes(order)
    shift = 8 * slot
    z = 1 << shift
    # (1 + (zeta - 1) x)^ell = sum_j C(ell, j) (zeta - 1)^j x^j, packed once.
    weights = [math.comb(ell, j) * (z - 1) ** j for j in range(ell + 1)]

    acc = [0] * (order + 1)
    acc[0] = 1
    for k in range(1, order // ell + 1):
        step = ell * k
        # Descending n keeps acc[n - j*step] at its pre-factor value.
        for n in range(order, step - 1, -1):
            extra = 0
            for j in range(1, min(ell, n // step) + 1):
                extra += weights[j] * acc[n - j * step]
            if extra:
                acc[n] += extra
    for k in range(1, order + 1):
        for n in range(k, order + 1):
            acc[n] += acc[n - k]

    pn = partition_numbers(order)
    coeffs = []
    for n, packed in enumerate(acc):
        raw = packed.to_bytes(slot * (n + 1), "little")
        poly = ZetaPoly(
            int.from_bytes(raw[m * slot : (m + 1) * slot], "little") for m in range(n + 1)
        )
        if sum(poly.coeffs) != pn[n]:
            raise ArithmeticError(f"unpacking failed at q^{n}")
        coeffs.append(poly)
    return HookSeries(ell, order, tuple(coeffs))


def _check_residue(b: int, a: int, min_modulus: int = 2) -> None:
    if b < min_modulus:
        raise ValueError(f"modulus b must be at least {min_modulus}, got {b}")
    if not 0 <= a < b:
        raise ValueError(f"residue a must lie in [0, {b}), got {a}")


def residue_filter_exact(series: HookSeries, b: int, a: int) -> list[int]:
    """Partitions of n whose ell-hook count is a mod b, for n = 0..order.

    The roots-of-unity average collapses to summing every b-th coefficient,
    so no complex arithmetic is involved.
    """
    _check_residue(b, a)
    return [c.residue_sum(b, a) for c in series.coeffs]


@lru_cache(maxsize=32)
def _core_series(ell: int, order: int) -> tuple[int, ...]:
    """prod_k (1 - q^(ell k))^ell / (1 - q^k), exactly (nonnegative coefficients)."""
    acc = [0] * (order + 1)
    acc[0] = 1
    for k in range(1, order // ell + 1):
        step = ell * k
        for _ in range(ell):
            for n in range(order, step - 1, -1):
                acc[n] -= acc[n - step]
    for k in range(1, order + 1):
        for n in range(k, order + 1):
            acc[n] += acc[n - k]
    return tuple(acc)


def _complex_hook_series(ell: int, xi, order: int) -> np.ndarray:
    # Grouped as prod_k g(q^(ell k)) * core(q) with g(x) = ((1 + (xi-1)x)/(1-x))^ell.
    # g = (1 + xi*x/(1-x))^ell has coefficients bounded by those of (1-x)^-ell,
    # so no floating intermediate exceeds p(n) and nothing cancels.
    depth = order // ell
    g = np.zeros(depth + 1, dtype=COMPLEX)
    g[0] = 1
    base = np.full(depth + 1, xi, dtype=COMPLEX)
    base[0] = 1
    for _ in range(ell):
        g = np.convolve(g, base)[: depth + 1]
    acc = np.zeros(order + 1, dtype=COMPLEX)
    acc[0] = 1
    for k in range(1, depth + 1):
        step = ell * k
        old = acc.copy()
        for m in range(1, order // step + 1):
            acc[m * step :] += g[m] * old[: order + 1 - m * step]
    core = np.array(_core_series(ell, order), dtype=REAL)
    return np.convolve(acc, core)[: order + 1]


def residue_filter_complex(ell: int, b: int, a: int, order: int) -> np.ndarray:
    """Floating-point evaluation of (1/b) sum_k zeta_b^(-a k) H(zeta_b^k; q).

    Works in extended precision (``np.clongdouble``): entries that are tiny
    next to p(n) would otherwise carry an absolute error of order eps * p(n).
    ``b = 1`` is accepted and returns p(0..order). Raises
    :class:`FilterImaginaryPartError` if any entry keeps an imaginary part
    above 1e-6 relative to its real part.
    """
    _check_residue(b, a, min_modulus=1)
    tau = 8 * np.arctan(REAL(1))
    total = np.zeros(order + 1, dtype=COMPLEX)
    for k in range(b):
        xi = np.exp(COMPLEX(1j) * tau * (REAL(k) / b))
        phase = np.exp(COMPLEX(-1j) * tau * (REAL(a * k % b) / b))
        total += phase * _complex_hook_series(ell, xi, order)
    total /= b
    scale = np.maximum(np.abs(total.real), 1)
    bad = np.nonzero(np.abs(total.imag) > IMAG_TOLERANCE * scale)[0]
    if bad.size:
        n = int(bad[0])
        raise FilterImaginaryPartError(
            f"imaginary part {float(total.imag[n]):.3e} at q^{n} "
            f"(real part {float(total.real[n]):.6e})"
        )
    return total.real.copy()


def write_table(series: HookSeries, fp: IO[str]) -> None:
    """Write ``n<TAB>m<TAB>h_ell(m, n)`` rows under a ``# ell=.. order=..`` header."""
    fp.write(f"# ell={series.ell} order={series.order}\n")
    for n, poly in enumerate(series.coeffs):
        for m, c in enumerate(poly.coeffs):
            fp.write(f"{n}\t{m}\t{c}\n")


def read_table(lines: Iterable[str] | IO[str]) -> HookSeries:
    it = iter(lines)
    header = next(it).strip()
    if not header.startswith("#"):
        raise ValueError("missing '# ell=<l> order=<N>' header")
    fields = dict(tok.split("=", 1) for tok in header[1:].split())
    ell, order = int(fields["ell"]), int(fields["order"])
    table: list[dict[int, int]] = [dict() for _ in range(order + 1)]
    for lineno, line in enumerate(it, start=2):
        line = line.strip()
        if not line:
            continue
        try:
            n, m, c = (int(x) for x in line.split("\t"))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected three tab-separated integers") from exc
        table[n][m] = c
    coeffs = []
    for row in table:
        dense = [0] * (max(row) + 1 if row else 0)
        for m, c in row.items():
            dense[m] = c
        coeffs.append(ZetaPoly(dense))
    return HookSeries(ell, order, tuple(coeffs))

