from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

MAX_INDEX = 64


@lru_cache(maxsize=None)
def _bernoulli_numbers(limit: int) -> tuple[Fraction, ...]:
    # sum_{k<m+1} C(m+1, k) B_k = 0, with B_1 = -1/2.
    out = [Fraction(1)]
    for m in range(1, limit + 1):
        out.append(-sum(comb(m + 1, k) * out[k] for k in range(m)) / (m + 1))
    return tuple(out)


def bernoulli_number(n: int) -> Fraction:
    if not 0 <= n <= MAX_INDEX:
        raise ValueError(f"Bernoulli index must lie in [0, {MAX_INDEX}], got {n}")
    return _bernoulli_numbers(MAX_INDEX)[n]


def bernoulli_polynomial(n: int, a) -> Fraction:
    """Exact B_n(a) = sum_k C(n, k) B_k a^(n-k) for rational ``a``.

    Floats are converted exactly via :class:`fractions.Fraction`, so pass
    ``Fraction(1, 3)`` rather than ``1/3`` when the rational value matters.
    """
    if not 0 <= n <= MAX_INDEX:
        raise ValueError(f"Bernoulli index must lie in [0, {MAX_INDEX}], got {n}")
    a = Fraction(a)
    nums = _bernoulli_numbers(MAX_INDEX)
    return sum((comb(n, k) * nums[k] * a ** (n - k) for k in range(n + 1)), Fraction(0))
