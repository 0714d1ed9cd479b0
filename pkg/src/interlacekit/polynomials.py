"""Dense univariate polynomials over the rationals.

Coefficients are stored ascending, so ``coeffs[k]`` multiplies x**k.
Instances are immutable and hashable.  The zero polynomial has an empty
coefficient tuple and degree -1; every nonzero polynomial keeps a
nonzero leading coefficient, so ``degree`` is always honest.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from . import _intops
from .errors import InputFormatError, ZeroPolynomialError
from .rationals import Rational, as_rational, format_rational, parse_rational


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @classmethod
    def from_roots(cls, roots: Iterable[int | Fraction]) -> "Polynomial":
        """Monic polynomial with the given roots, repeats giving multiplicity."""
        coeffs = [Fraction(1)]
        for root in roots:
            r = as_rational(root)
            coeffs = [Fraction(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= r * coeffs[i + 1]
        return cls(coeffs)

    @classmethod
    def constant(cls, value: int | Fraction) -> "Polynomial":
        return cls([as_rational(value)])

    def evaluate(self, point: int | Fraction) -> Fraction:
        """Value at a rational point, by Horner's rule."""
        t = as_rational(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def monic(self) -> "Polynomial":
        lead = self.leading_coefficient()
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self._coeffs])

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        pairs = zip_longest(self._coeffs, other._coeffs, fillvalue=Fraction(0))
        return Polynomial([a + b for a, b in pairs])

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        pairs = zip_longest(self._coeffs, other._coeffs, fillvalue=Fraction(0))
        return Polynomial([a - b for a, b in pairs])

    def __rsub__(self, other) -> "Polynomial":
        return (-self).__add__(other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([as_rational(other) * c for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact euclidean division over the rationals."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dg = other.degree
        lead = other._coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            factor = rem[-1] / lead
            shift = len(rem) - 1 - dg
            quot[shift] = factor
            for i in range(dg + 1):
                rem[shift + i] -= factor * other._coeffs[i]
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)), by Horner's rule on polynomial values."""
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def __repr__(self) -> str:
        inside = ", ".join(format_rational(c) for c in self._coeffs)
        return f"Polynomial([{inside}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if k == 0:
                body = mag
            elif k == 1:
                body = "x" if abs(c) == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if abs(c) == 1 else f"{mag}*x^{k}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def lin_comb(f: Polynomial, g: Polynomial, alpha: int | Fraction) -> Polynomial:
    """f + alpha*g."""
    return f + as_rational(alpha) * g


def evaluate(p: Polynomial, point: int | Fraction) -> Fraction:
    return p.evaluate(point)


def derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over the rationals.

    Internally runs a primitive pseudo-remainder sequence on integer
    copies, which avoids rational blowup; the result is normalized to a
    monic rational polynomial.  gcd(p, 0) = monic p; gcd(0, 0) is
    undefined and raises.
    """
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    g = _intops.poly_gcd(
        _intops.from_fraction_coeffs(p.coeffs),
        _intops.from_fraction_coeffs(q.coeffs),
    )
    return Polynomial(g).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic polynomial with the same real and complex roots, all simple."""
    if p.is_zero:
        raise ZeroPolynomialError("squarefree part of zero is undefined")
    if p.degree == 0:
        return Polynomial([1])
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    quot, rem = divmod(p, g)
    if not rem.is_zero:
        raise AssertionError("gcd does not divide its argument")
    return quot.monic()


def poly_to_strings(p: Polynomial) -> list[str]:
    """Ascending coefficient strings, the on-disk polynomial form."""
    return [format_rational(c) for c in p.coeffs]


def poly_from_strings(items: Sequence[str]) -> Polynomial:
    if not isinstance(items, (list, tuple)):
        raise InputFormatError("polynomial must be an array of coefficient strings")
    return Polynomial([parse_rational(item) for item in items])
