"""Integer-coefficient kernels behind the exact decision procedures.

Polynomials here are plain lists of Python ints in ascending degree
order with a nonzero last element; ``[]`` is the zero polynomial.
Rational polynomials enter by clearing denominators, which multiplies
them by a positive rational.  Root sets, signs at a point, and sign
variation counts are all invariant under that scaling, and those are
the only properties callers read back out.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

IntPoly = list[int]


def trim(coeffs: IntPoly) -> IntPoly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def from_fraction_coeffs(coeffs: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and strip content: a positive multiple of the input."""
    out = []
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    for c in coeffs:
        out.append(c.numerator * (scale // c.denominator))
    return primitive(trim(out))


def content(coeffs: IntPoly) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(coeffs: IntPoly) -> IntPoly:
    """Divide out the (positive) content. Leading sign is preserved."""
    if not coeffs:
        return coeffs
    g = content(coeffs)
    if g > 1:
        return [c // g for c in coeffs]
    return coeffs


def derivative(coeffs: IntPoly) -> IntPoly:
    return [i * c for i, c in enumerate(coeffs)][1:]


def eval_sign(coeffs: IntPoly, num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via homogenized integer Horner."""
    if not coeffs:
        return 0
    acc = coeffs[-1]
    dpow = 1
    for i in range(len(coeffs) - 2, -1, -1):
        dpow *= den
        acc = acc * num + coeffs[i] * dpow
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def eval_sign_at(coeffs: IntPoly, point: Fraction) -> int:
    return eval_sign(coeffs, point.numerator, point.denominator)


def pseudo_remainder(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of lc(g)**(deg f - deg g + 1) * f by g, fraction-free.

    Requires deg f >= deg g >= 0.  The scale factor keeps every division
    exact over the integers; no rationals are formed.
    """
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    steps = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        lead = r[-1]
        shift = len(r) - len(g)
        r = [lg * c for c in r]
        for i in range(len(g)):
            r[shift + i] -= lead * g[i]
        r.pop()
        trim(r)
        steps -= 1
    if steps > 0 and r:
        m = lg ** steps
        r = [m * c for c in r]
    return r


def neg_signed_prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """A positive multiple of -rem(f, g), content stripped.

    pseudo_remainder scales rem(f, g) by lc(g)**delta; when that factor
    is negative the signs would flip relative to the true remainder,
    which would corrupt Sturm sign variation counts, so flip them back.
    """
    r = pseudo_remainder(f, g)
    delta = len(f) - len(g) + 1
    if g[-1] < 0 and delta % 2 == 1:
        r = [-c for c in r]
    return primitive([-c for c in r])


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient; [] only if both zero."""
    a = primitive(trim(list(f)))
    b = primitive(trim(list(g)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(trim(pseudo_remainder(a, b)))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of a squarefree integer polynomial.

    Each element is a positive multiple of the textbook chain entry
    built from p, so sign variations at any point agree with the
    textbook chain exactly.
    """
    chain = [primitive(list(p))]
    d = trim(derivative(chain[0]))
    if d:
        chain.append(primitive(d))
    while len(chain[-1]) >= 2:
        r = neg_signed_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(r)
    return chain


def variations(signs: Sequence[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def variations_at(chain: Sequence[IntPoly], point: Fraction) -> int:
    num, den = point.numerator, point.denominator
    return variations([eval_sign(c, num, den) for c in chain])


def cauchy_bound(coeffs: IntPoly) -> Fraction:
    """Strict bound on root magnitude: every root r has |r| < the bound."""
    lead = abs(coeffs[-1])
    worst = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 1 + Fraction(worst, lead)
