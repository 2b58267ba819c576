from __future__ import annotations

from typing import Iterable


class ZetaPoly:
    """Polynomial in zeta with exact integer coefficients, lowest degree first.

    Trailing zeros are stripped, so equal polynomials compare equal and the
    zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self._coeffs):
            return self._coeffs[m]
        return 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __call__(self, zeta):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * zeta + c
        return acc

    def derivative(self) -> "ZetaPoly":
        return ZetaPoly(m * c for m, c in enumerate(self._coeffs) if m)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZetaPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ZetaPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "ZetaPoly") -> "ZetaPoly":
        a, b = self._coeffs, ZetaPoly._coerce(other)._coeffs
        if len(a) < len(b):
            a, b = b, a
        return ZetaPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "ZetaPoly":
        return ZetaPoly(-c for c in self._coeffs)

    def __sub__(self, other: "ZetaPoly") -> "ZetaPoly":
        return self + (-ZetaPoly._coerce(other))

    def __mul__(self, other: "ZetaPoly") -> "ZetaPoly":
        b = ZetaPoly._coerce(other)._coeffs
        a = self._coeffs
        if not a or not b:
            return ZetaPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ZetaPoly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(value) -> "ZetaPoly":
        if isinstance(value, ZetaPoly):
            return value
        if isinstance(value, int):
            return ZetaPoly([value])
        raise TypeError(f"cannot combine ZetaPoly with {type(value).__name__}")

    def residue_sum(self, b: int, a: int) -> int:
        """Sum of the coefficients of zeta**m over m = a (mod b)."""
        return sum(self._coeffs[a::b])

    def __repr__(self) -> str:
        if not self._coeffs:
            return "ZetaPoly(0)"
        terms = []
        for m in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[m]
            if not c:
                continue
            mono = "" if m == 0 else ("z" if m == 1 else f"z^{m}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return "ZetaPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"
