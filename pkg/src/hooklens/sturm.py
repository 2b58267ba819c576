"""Exact real-root counting with Sturm sequences over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Poly = list[Fraction]  # lowest degree first, no trailing zeros


def _trim(p: Sequence) -> Poly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def _primitive(p: Poly) -> Poly:
    """Scale by a positive rational to coprime integer coefficients (keeps signs)."""
    if not p:
        return p
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [Fraction(c, g) for c in ints]


def derivative(p: Poly) -> Poly:
    return _trim([k * c for k, c in enumerate(p)][1:])


def remainder(a: Poly, b: Poly) -> Poly:
    return divide(a, b)[1]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _primitive(remainder(a, b))
    return _primitive(a)


def sturm_sequence(p: Sequence) -> list[Poly]:
    p = _primitive(_trim(p))
    if not p:
        raise ValueError("zero polynomial has no Sturm sequence")
    seq = [p, _primitive(derivative(p))]
    while seq[-1]:
        seq.append(_primitive([-c for c in remainder(seq[-2], seq[-1])]))
    return seq[:-1]


def _sign_changes(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def _sign_at(p: Poly, x: Fraction) -> int:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def _sign_at_neg_inf(p: Poly) -> int:
    s = (p[-1] > 0) - (p[-1] < 0)
    return s if (len(p) - 1) % 2 == 0 else -s


def _sign_at_pos_inf(p: Poly) -> int:
    return (p[-1] > 0) - (p[-1] < 0)


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi]; None means -inf / +inf."""
    # a multiple root at an endpoint zeroes the whole sequence, so work squarefree
    seq = sturm_sequence(squarefree_part(p))
    left = [_sign_at_neg_inf(q) for q in seq] if lo is None else [_sign_at(q, Fraction(lo)) for q in seq]
    right = [_sign_at_pos_inf(q) for q in seq] if hi is None else [_sign_at(q, Fraction(hi)) for q in seq]
    return _sign_changes(left) - _sign_changes(right)


def squarefree_part(p: Sequence) -> Poly:
    p = _primitive(_trim(p))
    g = poly_gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    quotient, rem = divide(p, g)
    assert not rem
    return _primitive(quotient)


def divide(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = _trim(a)
    return _trim(q), a
