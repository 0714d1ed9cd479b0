"""Interlacing decisions, pencil reality scans, and their cross-check.

Two real-rooted polynomials f (degree n) and g (degree n - 1) interlace
when their roots, listed with multiplicity, can be merged into the weak
chain r_1 <= s_1 <= r_2 <= ... <= s_{n-1} <= r_n.  That combinatorial
condition is decided here exactly, with every root comparison settled by
interval refinement plus a gcd certificate for ties, never by a
tolerance.

The companion check is analytic: if f and g interlace then every member
f + alpha*g of the real pencil is real rooted.  A finite alpha scan can
therefore falsify interlacing but never prove it; hko_crosscheck runs
both routes and reports whether they tell a consistent story.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from . import _intops
from .errors import DegreeMismatchError, ZeroPolynomialError
from .polynomials import Polynomial, lin_comb, poly_gcd
from .rationals import as_rational, format_rational
from .realroots import RootIntervals, SturmChain, is_real_rooted, isolate_roots
from .rng import SplitMix64

DEFAULT_ALPHA_SEED = 0x5EED
DEFAULT_ALPHA_MAX_POWER = 10
DEFAULT_ALPHA_RANDOM_COUNT = 64
DEFAULT_ALPHA_MAGNITUDE = 10 ** 4


class InterlaceVerdict(str, enum.Enum):
    INTERLACES = "Interlaces"
    DOES_NOT_INTERLACE = "DoesNotInterlace"
    DEGREE_MISMATCH = "DegreeMismatch"
    NOT_REAL_ROOTED = "NotRealRooted"


@dataclass(frozen=True)
class ChainEntry:
    """One slot of the merged root chain: whose root, bracketed where."""

    owner: str
    lo: Fraction
    hi: Fraction

    def as_dict(self) -> dict:
        return {
            "owner": self.owner,
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
        }


@dataclass(frozen=True)
class InterlaceReport:
    """Outcome of an interlacing decision.

    ``chain_certificate`` is present exactly for the Interlaces verdict:
    2n - 1 entries alternating owner f, g, f, ..., f in chain order.
    ``failure_witness`` is present exactly for DoesNotInterlace: the
    1-based chain index k plus which side of r_k <= s_k <= r_{k+1}
    broke ("lower" means s_k < r_k held instead, "upper" means
    s_k > r_{k+1}; under strict=True the same labels flag a tie).
    ``not_real_rooted`` names the offending inputs for NotRealRooted.
    """

    verdict: InterlaceVerdict
    strict: bool = False
    chain_certificate: tuple[ChainEntry, ...] | None = None
    failure_witness: tuple[int, str] | None = None
    not_real_rooted: tuple[str, ...] = ()
    degrees: tuple[int, int] | None = None
    lc_sign_f: int | None = None
    lc_sign_g: int | None = None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "strict": self.strict,
            "chain_certificate": (
                None
                if self.chain_certificate is None
                else [entry.as_dict() for entry in self.chain_certificate]
            ),
            "failure_witness": (
                None
                if self.failure_witness is None
                else {"k": self.failure_witness[0], "side": self.failure_witness[1]}
            ),
            "not_real_rooted": list(self.not_real_rooted),
            "degrees": None if self.degrees is None else list(self.degrees),
            "lc_sign_f": self.lc_sign_f,
            "lc_sign_g": self.lc_sign_g,
        }


@dataclass(frozen=True)
class PencilReport:
    """Finite reality scan over f + alpha*g.

    ``all_real`` summarizes the sampled alphas only; a True value is
    evidence, not proof.  ``witness`` is the first alpha, in input
    order, whose combination fails to be real rooted.
    """

    alphas_tested: tuple[Fraction, ...]
    witness: Fraction | None
    all_real: bool
    lc_sign_f: int
    lc_sign_g: int

    def as_dict(self) -> dict:
        return {
            "alphas_tested": [format_rational(a) for a in self.alphas_tested],
            "witness": None if self.witness is None else format_rational(self.witness),
            "all_real": self.all_real,
            "lc_sign_f": self.lc_sign_f,
            "lc_sign_g": self.lc_sign_g,
        }


@dataclass(frozen=True)
class CrosscheckReport:
    """Agreement between the root-order route and the pencil route.

    Inconsistent means the routes contradict: an Interlaces verdict next
    to a non-real pencil member, which would certify a bug.  A pair that
    fails to interlace while every sampled alpha stays real is reported
    consistent but unfalsified, since the scan is finite.
    """

    consistent: bool
    unfalsified: bool
    interlace: InterlaceReport
    pencil: PencilReport

    @property
    def verdict(self) -> str:
        return "Consistent" if self.consistent else "Inconsistent"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "consistent": self.consistent,
            "unfalsified": self.unfalsified,
            "interlace": self.interlace.as_dict(),
            "pencil": self.pencil.as_dict(),
        }


class _RootComparer:
    """Exact order decisions between isolated roots of two polynomials.

    Keeps a private, refinable copy of both interval lists.  Distinct
    roots separate after finitely many bisections; equal roots are
    certified equal by locating a root of gcd(f, g) inside the interval
    overlap.  Either way every comparison terminates with a proof.
    """

    def __init__(self, roots_f: RootIntervals, roots_g: RootIntervals):
        self._state = {
            "f": [list(iv) for iv in roots_f.intervals],
            "g": [list(iv) for iv in roots_g.intervals],
        }
        self._ints = {
            "f": _intops.from_fraction_coeffs(roots_f.poly.coeffs),
            "g": _intops.from_fraction_coeffs(roots_g.poly.coeffs),
        }
        self._polys = {"f": roots_f.poly, "g": roots_g.poly}
        self._shared: SturmChain | None | bool = None

    def interval(self, owner: str, idx: int) -> tuple[Fraction, Fraction]:
        lo, hi = self._state[owner][idx]
        return lo, hi

    def _shared_chain(self) -> SturmChain | None:
        if self._shared is None:
            h = poly_gcd(self._polys["f"], self._polys["g"])
            self._shared = SturmChain(h) if h.degree >= 1 else False
        return self._shared or None

    def _refine(self, owner: str, idx: int) -> None:
        box = self._state[owner][idx]
        lo, hi = box
        if lo == hi:
            return
        mid = (lo + hi) / 2
        s = _intops.eval_sign_at(self._ints[owner], mid)
        if s == 0:
            box[0] = box[1] = mid
        elif _intops.eval_sign_at(self._ints[owner], lo) * s < 0:
            box[1] = mid
        else:
            box[0] = mid

    def compare(self, a: tuple[str, int], b: tuple[str, int]) -> int:
        """-1, 0, or +1 as root a is below, equal to, or above root b."""
        owner_a, ia = a
        owner_b, ib = b
        if owner_a == owner_b:
            return (ia > ib) - (ia < ib)
        while True:
            a_lo, a_hi = self._state[owner_a][ia]
            b_lo, b_hi = self._state[owner_b][ib]
            if a_lo == a_hi and b_lo == b_hi:
                return (a_lo > b_lo) - (a_lo < b_lo)
            if a_lo == a_hi:
                if a_lo <= b_lo:
                    return -1
                if a_lo >= b_hi:
                    return 1
                if _intops.eval_sign_at(self._ints[owner_b], a_lo) == 0:
                    return 0
                self._refine(owner_b, ib)
                continue
            if b_lo == b_hi:
                if b_lo <= a_lo:
                    return 1
                if b_lo >= a_hi:
                    return -1
                if _intops.eval_sign_at(self._ints[owner_a], b_lo) == 0:
                    return 0
                self._refine(owner_a, ia)
                continue
            if a_hi <= b_lo:
                return -1
            if b_hi <= a_lo:
                return 1
            shared = self._shared_chain()
            if shared is not None:
                lo = max(a_lo, b_lo)
                hi = min(a_hi, b_hi)
                if shared.variations_at(lo) - shared.variations_at(hi) > 0:
                    return 0
            self._refine(owner_a, ia)
            self._refine(owner_b, ib)


def _expand(mults: Sequence[int]) -> list[int]:
    """Interval index per chain slot, repeated by multiplicity."""
    out = []
    for idx, m in enumerate(mults):
        out.extend([idx] * m)
    return out


def interlaces_by_roots(
    roots_f: RootIntervals, roots_g: RootIntervals, strict: bool = False
) -> InterlaceReport:
    """Decide the weak (or strict) interlacing chain from isolated roots.

    Roots are taken with multiplicity; the pair must carry n and n - 1
    of them.  Every comparison is exact, so the verdict comes with
    either a bracket certificate for the full chain or the first broken
    inequality.
    """
    n = roots_f.total_multiplicity
    m = roots_g.total_multiplicity
    if n != m + 1:
        return InterlaceReport(
            verdict=InterlaceVerdict.DEGREE_MISMATCH,
            strict=strict,
            degrees=(n, m),
        )
    seq_f = _expand(roots_f.multiplicities)
    seq_g = _expand(roots_g.multiplicities)
    comparer = _RootComparer(roots_f, roots_g)
    passes = (lambda c: c < 0) if strict else (lambda c: c <= 0)
    for k in range(n - 1):
        if not passes(comparer.compare(("f", seq_f[k]), ("g", seq_g[k]))):
            return InterlaceReport(
                verdict=InterlaceVerdict.DOES_NOT_INTERLACE,
                strict=strict,
                failure_witness=(k + 1, "lower"),
                degrees=(n, m),
            )
        if not passes(comparer.compare(("g", seq_g[k]), ("f", seq_f[k + 1]))):
            return InterlaceReport(
                verdict=InterlaceVerdict.DOES_NOT_INTERLACE,
                strict=strict,
                failure_witness=(k + 1, "upper"),
                degrees=(n, m),
            )
    entries = []
    for k in range(n - 1):
        lo, hi = comparer.interval("f", seq_f[k])
        entries.append(ChainEntry("f", lo, hi))
        lo, hi = comparer.interval("g", seq_g[k])
        entries.append(ChainEntry("g", lo, hi))
    lo, hi = comparer.interval("f", seq_f[n - 1])
    entries.append(ChainEntry("f", lo, hi))
    return InterlaceReport(
        verdict=InterlaceVerdict.INTERLACES,
        strict=strict,
        chain_certificate=tuple(entries),
        degrees=(n, m),
    )


def _lc_sign(p: Polynomial) -> int:
    lead = p.leading_coefficient()
    return 1 if lead > 0 else -1


def interlaces_exact(
    f: Polynomial, g: Polynomial, strict: bool = False
) -> InterlaceReport:
    """Decide whether f and g interlace, from the polynomials themselves.

    Preconditions are reported, not assumed: a degree gap other than one
    yields DegreeMismatch, and a non-real-rooted input yields
    NotRealRooted naming the culprit.  Otherwise the roots are isolated
    and the chain condition is decided exactly.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("interlacing needs nonzero polynomials")
    signs = (_lc_sign(f), _lc_sign(g))
    if f.degree != g.degree + 1:
        return InterlaceReport(
            verdict=InterlaceVerdict.DEGREE_MISMATCH,
            strict=strict,
            degrees=(f.degree, g.degree),
            lc_sign_f=signs[0],
            lc_sign_g=signs[1],
        )
    bad = tuple(
        name for name, p in (("f", f), ("g", g)) if not is_real_rooted(p)
    )
    if bad:
        return InterlaceReport(
            verdict=InterlaceVerdict.NOT_REAL_ROOTED,
            strict=strict,
            not_real_rooted=bad,
            degrees=(f.degree, g.degree),
            lc_sign_f=signs[0],
            lc_sign_g=signs[1],
        )
    report = interlaces_by_roots(isolate_roots(f), isolate_roots(g), strict=strict)
    return replace(report, lc_sign_f=signs[0], lc_sign_g=signs[1])


def default_alphas(
    seed: int = DEFAULT_ALPHA_SEED,
    random_count: int = DEFAULT_ALPHA_RANDOM_COUNT,
    max_power: int = DEFAULT_ALPHA_MAX_POWER,
) -> list[Fraction]:
    """The standard scan grid: zero, signed powers of two, seeded randoms.

    Deterministic for fixed arguments.  Order matters because the first
    failing entry becomes the reported witness: 0 first, then 2**k and
    -2**k for k from -1 up to max_power, then random_count rationals
    with numerator in [-10^4, 10^4] and denominator in [1, 10^4] drawn
    from a splitmix64 stream.  Duplicates are dropped, keeping first
    occurrence.
    """
    grid: list[Fraction] = [Fraction(0)]
    for k in range(-1, max_power + 1):
        step = Fraction(2) ** k
        grid.append(step)
        grid.append(-step)
    rng = SplitMix64(seed)
    for _ in range(random_count):
        grid.append(rng.rational(DEFAULT_ALPHA_MAGNITUDE, DEFAULT_ALPHA_MAGNITUDE))
    seen = set()
    out = []
    for a in grid:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return out


def pencil_scan(
    f: Polynomial,
    g: Polynomial,
    alphas: Sequence[int | Fraction] | None = None,
) -> PencilReport:
    """Test real rootedness of f + alpha*g across a finite alpha grid.

    Scans every alpha (first failure recorded as the witness, scan not
    truncated), so the report always covers the full grid.  Requires
    deg f = deg g + 1, which keeps every combination at degree n.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("pencil scan needs nonzero polynomials")
    if f.degree != g.degree + 1:
        raise DegreeMismatchError(
            f"need deg f = deg g + 1, got {f.degree} and {g.degree}"
        )
    if alphas is None:
        grid = default_alphas()
    else:
        seen = set()
        grid = []
        for a in alphas:
            a = as_rational(a)
            if a not in seen:
                seen.add(a)
                grid.append(a)
    witness = None
    for alpha in grid:
        if not is_real_rooted(lin_comb(f, g, alpha)) and witness is None:
            witness = alpha
    return PencilReport(
        alphas_tested=tuple(grid),
        witness=witness,
        all_real=witness is None,
        lc_sign_f=_lc_sign(f),
        lc_sign_g=_lc_sign(g),
    )


def hko_crosscheck(
    f: Polynomial,
    g: Polynomial,
    alphas: Sequence[int | Fraction] | None = None,
    strict: bool = False,
) -> CrosscheckReport:
    """Run the root-order decision and the pencil scan, then compare.

    The only inconsistent outcome is Interlaces alongside a pencil
    witness; that combination is mathematically impossible, so seeing
    it means the implementation is wrong somewhere.  A non-interlacing
    pair with a fully real scan is flagged unfalsified instead.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("cross-check needs nonzero polynomials")
    if f.degree != g.degree + 1:
        raise DegreeMismatchError(
            f"need deg f = deg g + 1, got {f.degree} and {g.degree}"
        )
    interlace_report = interlaces_exact(f, g, strict=strict)
    pencil_report = pencil_scan(f, g, alphas=alphas)
    contradiction = (
        interlace_report.verdict == InterlaceVerdict.INTERLACES
        and pencil_report.witness is not None
    )
    unfalsified = (
        interlace_report.verdict != InterlaceVerdict.INTERLACES
        and pencil_report.witness is None
    )
    return CrosscheckReport(
        consistent=not contradiction,
        unfalsified=unfalsified,
        interlace=interlace_report,
        pencil=pencil_report,
    )
