"""Exact scalars of the form (a + b*sqrt(2)) with a, b Gaussian rationals.

This field is just big enough for every explicit conjugating matrix that
has to be checked exactly: rational matrices embed with b = 0, the sqrt(2)
entries of the 3x3 witnesses live in the real part, and the rotation
generator of the unitary witness needs the imaginary part.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Ratish = Union[int, Fraction]


class Surd:
    """a + b*sqrt(2), with a = ar + ai*i and b = br + bi*i over Q."""

    __slots__ = ("ar", "ai", "br", "bi")

    def __init__(self, ar=0, ai=0, br=0, bi=0):
        self.ar = Fraction(ar)
        self.ai = Fraction(ai)
        self.br = Fraction(br)
        self.bi = Fraction(bi)

    # -- constructors -----------------------------------------------

    @staticmethod
    def lift(x) -> "Surd":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return Surd(x)
        raise TypeError(f"cannot lift {x!r} to Surd")

    @staticmethod
    def i() -> "Surd":
        return Surd(0, 1)

    @staticmethod
    def sqrt2() -> "Surd":
        return Surd(0, 0, 1)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.ar or self.ai or self.br or self.bi)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not (self.ai or self.br or self.bi)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.ar

    def rational_part(self) -> "Surd":
        return Surd(self.ar, self.ai)

    def sqrt2_part(self) -> "Surd":
        return Surd(self.br, self.bi)

    def to_complex(self) -> complex:
        root = 2 ** 0.5
        return complex(float(self.ar) + float(self.br) * root,
                       float(self.ai) + float(self.bi) * root)

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> "Surd":
        o = Surd.lift(other)
        return Surd(self.ar + o.ar, self.ai + o.ai, self.br + o.br, self.bi + o.bi)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.ar, -self.ai, -self.br, -self.bi)

    def __sub__(self, other) -> "Surd":
        return self + (-Surd.lift(other))

    def __rsub__(self, other) -> "Surd":
        return Surd.lift(other) + (-self)

    def __mul__(self, other) -> "Surd":
        o = Surd.lift(other)
        # complex products of the 1-part and sqrt2-part
        ar = (self.ar * o.ar - self.ai * o.ai) + 2 * (self.br * o.br - self.bi * o.bi)
        ai = (self.ar * o.ai + self.ai * o.ar) + 2 * (self.br * o.bi + self.bi * o.br)
        br = (self.ar * o.br - self.ai * o.bi) + (self.br * o.ar - self.bi * o.ai)
        bi = (self.ar * o.bi + self.ai * o.br) + (self.br * o.ai + self.bi * o.ar)
        return Surd(ar, ai, br, bi)

    __rmul__ = __mul__

    def _complex_inv(self) -> "Surd":
        # inverse assuming b = 0 (plain Gaussian rational)
        norm = self.ar * self.ar + self.ai * self.ai
        if not norm:
            raise ZeroDivisionError("division by zero Surd")
        return Surd(self.ar / norm, -self.ai / norm)

    def inv(self) -> "Surd":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Surd")
        # (a + b*r2)^-1 = (a - b*r2) / (a^2 - 2 b^2), the denominator being
        # a Gaussian rational (nonzero because sqrt(2) is irrational over Q(i))
        conj = Surd(self.ar, self.ai, -self.br, -self.bi)
        denom = self * conj
        assert denom.br == 0 and denom.bi == 0
        return conj * Surd(denom.ar, denom.ai)._complex_inv()

    def __truediv__(self, other) -> "Surd":
        return self * Surd.lift(other).inv()

    def __rtruediv__(self, other) -> "Surd":
        return Surd.lift(other) * self.inv()

    def __pow__(self, n: int) -> "Surd":
        if n == -1:
            return self.inv()
        if n < 0:
            return (self.inv()) ** (-n)
        out = Surd(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        try:
            o = Surd.lift(other)
        except TypeError:
            return NotImplemented
        return (self.ar, self.ai, self.br, self.bi) == (o.ar, o.ai, o.br, o.bi)

    def __hash__(self):
        return hash((self.ar, self.ai, self.br, self.bi))

    def __repr__(self) -> str:
        def cpx(re, im):
            if im == 0:
                return str(re)
            if re == 0:
                return f"{im}*i"
            return f"({re}{'+' if im > 0 else ''}{im}*i)"

        if self.br == 0 and self.bi == 0:
            return cpx(self.ar, self.ai)
        a = cpx(self.ar, self.ai)
        b = cpx(self.br, self.bi)
        if self.ar == 0 and self.ai == 0:
            return f"{b}*r2"
        return f"{a}+{b}*r2"


I_ = Surd.i()
R2 = Surd.sqrt2()


def surd_matrix(rows) -> list:
    return [[Surd.lift(x) for x in row] for row in rows]
