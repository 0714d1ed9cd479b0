"""Certified real root counting, isolation, and refinement.

Everything here reduces to Sturm's theorem: for a squarefree p and
points lo < hi with p(lo), p(hi) nonzero, the number of roots in
(lo, hi] equals V(lo) - V(hi), where V counts sign variations down the
Sturm chain.  All queries run on integer-scaled chains, so the answers
are exact counts, never estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _intops
from .errors import (
    EndpointRootError,
    InputFormatError,
    InternalInconsistencyError,
    ZeroPolynomialError,
)
from .polynomials import Polynomial, squarefree_part
from .rationals import Rational, as_rational, format_rational, parse_rational

DEFAULT_WIDTH = Fraction(1, 2 ** 20)


class SturmChain:
    """Sturm chain of the squarefree part of a polynomial.

    ``chain`` exposes the textbook sequence: the monic squarefree part,
    its derivative, then negated euclidean remainders down to a nonzero
    constant.  Counting queries run on a cached integer-scaled copy of
    the same chain; each scaled entry is a positive multiple of the
    rational entry, so sign variations agree while coefficient
    arithmetic stays in the integers.
    """

    __slots__ = ("_sqf", "_int_chain", "_rational_chain")

    def __init__(self, p: Polynomial):
        if p.is_zero:
            raise ZeroPolynomialError("Sturm chain of zero is undefined")
        sqf = squarefree_part(p)
        int_p = _intops.from_fraction_coeffs(sqf.coeffs)
        object.__setattr__(self, "_sqf", sqf)
        object.__setattr__(self, "_int_chain", _intops.sturm_chain(int_p))
        object.__setattr__(self, "_rational_chain", None)

    def __setattr__(self, name, value):
        raise AttributeError("SturmChain is immutable")

    @property
    def squarefree(self) -> Polynomial:
        """Monic squarefree polynomial the chain was built from."""
        return self._sqf

    @property
    def degree(self) -> int:
        return self._sqf.degree

    @property
    def chain(self) -> tuple[Polynomial, ...]:
        """The textbook rational chain, built on first access."""
        if self._rational_chain is None:
            seq = [self._sqf]
            if self._sqf.degree >= 1:
                seq.append(self._sqf.derivative())
                while seq[-1].degree >= 1:
                    rem = seq[-2] % seq[-1]
                    if rem.is_zero:
                        break
                    seq.append(-rem)
            object.__setattr__(self, "_rational_chain", tuple(seq))
        return self._rational_chain

    def variations_at(self, point: Fraction) -> int:
        return _intops.variations_at(self._int_chain, point)

    def sign_at(self, point: Fraction) -> int:
        """Sign of the squarefree part at a rational point."""
        return _intops.eval_sign_at(self._int_chain[0], point)

    def root_bound(self) -> Fraction:
        """Strict bound B: every real root r satisfies -B < r < B."""
        return _intops.cauchy_bound(self._int_chain[0])


def build_sturm(p: Polynomial) -> SturmChain:
    return SturmChain(p)


def count_roots_in(chain: SturmChain, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots in (lo, hi].

    Raises EndpointRootError if either endpoint is a root, because the
    variation difference is unreliable there.  Callers that pick their
    own endpoints should nudge and retry.
    """
    lo = as_rational(lo)
    hi = as_rational(hi)
    if lo >= hi:
        raise ValueError(f"empty interval: need lo < hi, got [{lo}, {hi}]")
    if chain.degree == 0:
        return 0
    if chain.sign_at(lo) == 0:
        raise EndpointRootError(f"lower endpoint {lo} is a root")
    if chain.sign_at(hi) == 0:
        raise EndpointRootError(f"upper endpoint {hi} is a root")
    return chain.variations_at(lo) - chain.variations_at(hi)


def _next_pow2_beyond(value: Fraction) -> Fraction:
    p = Fraction(1)
    while p <= value:
        p *= 2
    return p


def _safe_outer_bracket(chain: SturmChain) -> tuple[Fraction, Fraction]:
    """Bracket strictly containing every real root, endpoints not roots.

    The Cauchy bound is already strict, so the first candidate works;
    the nudge loop is a guard against any bound slippage, moving each
    endpoint halfway toward the next power of two.
    """
    bound = chain.root_bound()
    ceiling = _next_pow2_beyond(bound)
    m = bound
    while chain.sign_at(m) == 0 or chain.sign_at(-m) == 0:
        m = m + (ceiling - m) / 2
    return -m, m


def is_real_rooted(p: Polynomial) -> bool:
    """True iff every complex root of p is real.

    Multiplicities do not matter: p is real rooted exactly when its
    squarefree part of degree d has d real roots, and that count is a
    Sturm count over a certified outer bracket.  Constants are real
    rooted; the zero polynomial is rejected.
    """
    if p.is_zero:
        raise ZeroPolynomialError("is_real_rooted is undefined for zero")
    chain = SturmChain(p)
    d = chain.degree
    if d == 0:
        return True
    lo, hi = _safe_outer_bracket(chain)
    return chain.variations_at(lo) - chain.variations_at(hi) == d


@dataclass(frozen=True)
class RootIntervals:
    """Isolated real roots: disjoint rational intervals, one root each.

    ``intervals[k]`` is (lo, hi) with lo <= hi; a degenerate pair
    lo == hi pins the root exactly.  ``multiplicities[k]`` is the root's
    multiplicity in the source polynomial.  ``poly`` is the monic
    squarefree carrier whose sign changes certify the open intervals;
    refinement queries evaluate it and nothing else.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]
    poly: Polynomial

    def __post_init__(self):
        if len(self.intervals) != len(self.multiplicities):
            raise ValueError("one multiplicity per interval required")
        prev_hi = None
        for (lo, hi) in self.intervals:
            if lo > hi:
                raise ValueError(f"inverted interval [{lo}, {hi}]")
            if prev_hi is not None and lo < prev_hi:
                raise ValueError("intervals must be sorted and non-overlapping")
            prev_hi = hi

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)

    @classmethod
    def from_roots(
        cls,
        roots: Sequence[int | Fraction],
        multiplicities: Sequence[int] | None = None,
    ) -> "RootIntervals":
        """Exactly known rational roots as degenerate point intervals."""
        rs = [as_rational(r) for r in roots]
        if multiplicities is None:
            multiplicities = [1] * len(rs)
        if len(multiplicities) != len(rs):
            raise ValueError("one multiplicity per root required")
        if any(m < 1 for m in multiplicities):
            raise ValueError("multiplicities must be positive")
        if sorted(rs) != rs or len(set(rs)) != len(rs):
            raise ValueError("roots must be strictly increasing")
        carrier = Polynomial.from_roots(rs)
        return cls(
            intervals=tuple((r, r) for r in rs),
            multiplicities=tuple(int(m) for m in multiplicities),
            poly=carrier,
        )

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "lo": format_rational(lo),
                "hi": format_rational(hi),
                "mult": m,
            }
            for (lo, hi), m in zip(self.intervals, self.multiplicities)
        ]


def _isolate_squarefree(chain: SturmChain) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, one distinct real root in each."""
    p0 = chain._int_chain[0]
    lo, hi = _safe_outer_bracket(chain)
    v_lo = chain.variations_at(lo)
    v_hi = chain.variations_at(hi)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, v_lo, v_hi)]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count <= 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        mid = None
        step = b - a
        for _ in range(chain.degree + 2):
            step = step / 2
            candidate = a + step
            if _intops.eval_sign_at(p0, candidate) != 0:
                mid = candidate
                break
        if mid is None:
            raise InternalInconsistencyError(
                "could not find a non-root split point"
            )
        v_mid = chain.variations_at(mid)
        stack.append((mid, b, v_mid, vb))
        stack.append((a, mid, va, v_mid))
    return out


def _multiplicities(
    p: Polynomial, intervals: Sequence[tuple[Fraction, Fraction]]
) -> list[int]:
    """Multiplicity of the root inside each interval, via the gcd tower.

    With g_0 = p and g_{i+1} = gcd(g_i, g_i'), a root of multiplicity m
    in p appears in exactly g_0 .. g_{m-1}.  Interval endpoints are
    never roots of p, hence never roots of any g_i, so the Sturm counts
    below are always legal.
    """
    mults = [1] * len(intervals)
    cur = _intops.from_fraction_coeffs(p.coeffs)
    while True:
        nxt = _intops.poly_gcd(cur, _intops.derivative(cur))
        if len(nxt) <= 1:
            return mults
        layer = SturmChain(Polynomial(nxt))
        for i, (lo, hi) in enumerate(intervals):
            if lo == hi:
                if layer.sign_at(lo) == 0:
                    mults[i] += 1
            elif layer.variations_at(lo) - layer.variations_at(hi) > 0:
                mults[i] += 1
        cur = nxt


def isolate_roots(p: Polynomial) -> RootIntervals:
    """Isolate every distinct real root of p with its multiplicity.

    Returns intervals sorted ascending.  An empty result means p has no
    real roots.  The sum of multiplicities equals deg p exactly when p
    is real rooted.
    """
    if p.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of zero")
    chain = SturmChain(p)
    if chain.degree == 0:
        return RootIntervals(intervals=(), multiplicities=(), poly=chain.squarefree)
    intervals = _isolate_squarefree(chain)
    if p.degree == chain.degree:
        mults = [1] * len(intervals)
    else:
        mults = _multiplicities(p, intervals)
    return RootIntervals(
        intervals=tuple(intervals),
        multiplicities=tuple(mults),
        poly=chain.squarefree,
    )


def _bisect_once(
    p0: list[int], lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    """One bisection step on an open interval with a sign change.

    If the midpoint happens to be the root, collapse symmetrically to a
    small interval around it whose endpoints keep the old signs.
    """
    mid = (lo + hi) / 2
    s_mid = _intops.eval_sign_at(p0, mid)
    if s_mid == 0:
        delta = min((mid - lo) / 2, (hi - mid) / 2)
        return (mid - delta, mid + delta)
    if _intops.eval_sign_at(p0, lo) * s_mid < 0:
        return (lo, mid)
    return (mid, hi)


def refine_to(roots: RootIntervals, width: Rational) -> RootIntervals:
    """Shrink every interval to at most the given width.

    Refinement preserves the root set, the multiplicities, and the sign
    pattern of the carrier at interval endpoints.  After refinement,
    consecutive intervals are strictly separated: hi of one is below lo
    of the next.
    """
    width = as_rational(width)
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    p0 = _intops.from_fraction_coeffs(roots.poly.coeffs)
    refined: list[tuple[Fraction, Fraction]] = []
    for lo, hi in roots.intervals:
        while hi - lo > width:
            lo, hi = _bisect_once(p0, lo, hi)
        refined.append((lo, hi))
    for i in range(len(refined) - 1):
        while refined[i][1] >= refined[i + 1][0]:
            a_lo, a_hi = refined[i]
            b_lo, b_hi = refined[i + 1]
            if a_lo != a_hi:
                refined[i] = _bisect_once(p0, a_lo, a_hi)
            if b_lo != b_hi:
                refined[i + 1] = _bisect_once(p0, b_lo, b_hi)
            if a_lo == a_hi and b_lo == b_hi:
                raise InternalInconsistencyError(
                    "two point intervals coincide; roots were not distinct"
                )
    return RootIntervals(
        intervals=tuple(refined),
        multiplicities=roots.multiplicities,
        poly=roots.poly,
    )


def intervals_from_json_obj(items, poly: Polynomial) -> RootIntervals:
    """Rebuild RootIntervals from the serialized list form."""
    if not isinstance(items, list):
        raise InputFormatError("root intervals must be an array")
    ivs = []
    mults = []
    for item in items:
        if not isinstance(item, dict) or set(item) != {"lo", "hi", "mult"}:
            raise InputFormatError(
                "each interval needs exactly the keys lo, hi, mult"
            )
        lo = parse_rational(item["lo"])
        hi = parse_rational(item["hi"])
        if not isinstance(item["mult"], int) or item["mult"] < 1:
            raise InputFormatError("mult must be a positive integer")
        ivs.append((lo, hi))
        mults.append(item["mult"])
    return RootIntervals(
        intervals=tuple(ivs), multiplicities=tuple(mults), poly=poly
    )
