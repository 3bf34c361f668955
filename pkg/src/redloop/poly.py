"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are stored as sorted tuples of variable names (repeats encode
powers), which is cheap and simple at the degrees that occur here (the
constraint systems never exceed degree 2; catalog entries stay small).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Fraction
Monomial = tuple  # sorted tuple of variable names
Coeffish = Union[int, Fraction, "Poly"]

ONE: Monomial = ()


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational, got {value!r}")


class Poly:
    """Immutable polynomial; terms maps monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mon, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[tuple(sorted(mon))] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------

    @staticmethod
    def const(value) -> "Poly":
        return Poly({ONE: _as_fraction(value)})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly({(name,): Fraction(1)})

    @staticmethod
    def lift(value: Coeffish) -> "Poly":
        if isinstance(value, Poly):
            return value
        return Poly.const(value)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(ONE, Fraction(0))

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def variables(self) -> set:
        vs = set()
        for m in self.terms:
            vs.update(m)
        return vs

    def coefficient(self, mon: Iterable[str]) -> Fraction:
        return self.terms.get(tuple(sorted(mon)), Fraction(0))

    def linear_part(self) -> dict:
        """var -> coefficient for the degree-1 terms."""
        return {m[0]: c for m, c in self.terms.items() if len(m) == 1}

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        try:
            other = Poly.lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.lift(other) + (-self)

    def __mul__(self, other) -> "Poly":
        try:
            other = Poly.lift(other)
        except TypeError:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        return self.scale(Fraction(1) / _as_fraction(other))

    def scale(self, factor) -> "Poly":
        factor = _as_fraction(factor)
        return Poly({m: c * factor for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ---------------------------------------------------

    def substitute(self, bindings: Mapping[str, Coeffish]) -> "Poly":
        """Replace variables by rationals or polynomials."""
        out = Poly()
        for mon, coeff in self.terms.items():
            term = Poly.const(coeff)
            for v in mon:
                if v in bindings:
                    term = term * Poly.lift(bindings[v])
                else:
                    term = term * Poly.var(v)
            out = out + term
        return out

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        result = self.substitute(bindings)
        return result.constant_value()

    # -- printing -------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, coeff in self.sorted_terms():
            body = "*".join(mon)
            if not mon:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        text = "+".join(parts).replace("+-", "-")
        return text


def P(name: str) -> Poly:
    """Shorthand for a polynomial variable."""
    return Poly.var(name)
