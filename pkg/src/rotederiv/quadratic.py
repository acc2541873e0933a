"""Exact arithmetic in a real quadratic field ``Q(sqrt(d))``."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

Number = Union[int, Fraction, "QuadraticNumber"]


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, m)`` with ``n == f*f*m`` and ``m`` square free."""
    if n <= 0:
        raise ValueError("radicand must be positive")
    f, m = 1, n
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, m


@total_ordering
class QuadraticNumber:
    """The number ``p + q*sqrt(d)`` with ``p, q`` rational and ``d`` square free.

    Rationals are stored with ``q == 0`` and ``d == 1``; they combine with
    any field.  Mixing two different irrational fields raises ``ValueError``.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int | Fraction = 0, q: int | Fraction = 0, d: int = 1) -> None:
        p, q = Fraction(p), Fraction(q)
        if q:
            f, d = _squarefree_split(d)
            q *= f
            if d == 1:
                p, q = p + q, Fraction(0)
        if not q:
            d = 1
        self.p = p
        self.q = q
        self.d = d

    @classmethod
    def sqrt(cls, n: int) -> QuadraticNumber:
        return cls(0, 1, n)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def _coerce(self, other: Number) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if self.q and other.q and self.d != other.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other)
        return NotImplemented  # type: ignore[return-value]

    def _field(self, other: QuadraticNumber) -> int:
        return self.d if self.q else other.d

    def __add__(self, other: Number) -> QuadraticNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticNumber(self.p + o.p, self.q + o.q, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __sub__(self, other: Number) -> QuadraticNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticNumber(self.p - o.p, self.q - o.q, self._field(o))

    def __rsub__(self, other: Number) -> QuadraticNumber:
        return (-self) + other

    def __mul__(self, other: Number) -> QuadraticNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._field(o)
        return QuadraticNumber(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadraticNumber(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other: Number) -> QuadraticNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Number) -> QuadraticNumber:
        return self.inverse() * other

    def sign(self) -> int:
        """Exact sign of ``p + q*sqrt(d)``."""
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sq == 0 or sp == sq:
            return sp or sq
        if sp == 0:
            return sq
        # opposite signs: compare p^2 with q^2 d
        diff = self.p * self.p - self.q * self.q * self.d
        return sp if diff > 0 else sq

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if isinstance(other, QuadraticNumber):
            return self.p == other.p and self.q == other.q and (self.q == 0 or self.d == other.d)
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash(self.p) if self.q == 0 else hash((self.p, self.q, self.d))

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def __floor__(self) -> int:
        guess = math.floor(float(self))
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.p!r}, {self.q!r}, {self.d})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.d})"

    _PATTERN = re.compile(
        r"^\s*(?P<p>-?\d+(?:/\d+)?)\s*(?:\+\s*(?P<q>-?\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> QuadraticNumber:
        """Inverse of ``str``: ``"p + q*sqrt(d)"`` or a bare rational."""
        m = cls._PATTERN.match(text)
        if not m:
            raise ValueError(f"cannot parse quadratic number {text!r}")
        q = m.group("q")
        return cls(Fraction(m.group("p")), Fraction(q) if q else 0, int(m.group("d") or 1))


GOLDEN_RATIO = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
