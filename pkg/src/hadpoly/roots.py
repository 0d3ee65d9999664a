"""Exact real-root counting, isolation, and comparison.

Everything here works over the rationals with no floating point:

* Sturm chains count distinct real roots on intervals and on the whole line.
* Square-free (Yun) decomposition recovers multiplicities.
* Isolation bisects on sign-variation counts of the interval-rescaled
  polynomial (Descartes' rule on (0, 1)-remapped intervals), starting from
  the Cauchy root bound; rational roots hit by a bisection point are
  reported exactly and divided out.
* Isolated roots are comparable as exact algebraic numbers: equality is
  decided through a gcd, order by interval refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, gcd

#: default maximum width of a reported isolating interval
DEFAULT_MAX_WIDTH = Fraction(1, 8)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_variations(values: list[Fraction]) -> int:
    """Number of sign changes in a sequence, ignoring zeros."""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain p, p', -rem(...), ... of a square-free polynomial."""
    if p.is_zero:
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        _, r = divmod(chain[-2], chain[-1])
        chain.append(-r)
    chain.pop()
    return chain


def _chain_variations_at(chain: list[Poly], x: Fraction) -> int:
    return sign_variations([q.evaluate(x) for q in chain])


def _chain_variations_at_infinity(chain: list[Poly], positive: bool) -> int:
    signs = []
    for q in chain:
        if q.is_zero:
            continue
        s = _sign(q.leading_coefficient)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(
    p: Poly, lo: Fraction | None = None, hi: Fraction | None = None
) -> int:
    """Distinct real roots of ``p`` in (lo, hi], with ``None`` meaning +-infinity."""
    q = square_free_part(p)
    if q.degree == 0:
        return 0
    chain = sturm_chain(q)
    v_lo = (
        _chain_variations_at_infinity(chain, positive=False)
        if lo is None
        else _chain_variations_at(chain, lo)
    )
    v_hi = (
        _chain_variations_at_infinity(chain, positive=True)
        if hi is None
        else _chain_variations_at(chain, hi)
    )
    return v_lo - v_hi


def square_free_part(p: Poly) -> Poly:
    """Monic square-free part p / gcd(p, p')."""
    if p.is_zero:
        raise ValueError("square-free part of the zero polynomial is undefined")
    if p.degree == 0:
        return Poly.one()
    g = gcd(p, p.derivative())
    return p.exact_div(g).monic()


def yun_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Square-free factorization: pairwise-coprime monic factors with multiplicity.

    Returns pairs (q, m) with p proportional to the product of q**m and every
    q square-free; factors of multiplicity m collect exactly the roots of p
    of multiplicity m.
    """
    if p.is_zero:
        raise ValueError("square-free factorization of zero is undefined")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    g = gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    factors = []
    c = p.exact_div(g)
    d = dp.exact_div(g) - c.derivative()
    i = 1
    while c.degree is not None and c.degree >= 1:
        q = gcd(c, d) if not d.is_zero else c.monic()
        if q.degree >= 1:
            factors.append((q.monic(), i))
        c = c.exact_div(q)
        d = d.exact_div(q) - c.derivative()
        i += 1
    return factors


def cauchy_bound(p: Poly) -> Fraction:
    """All real roots of ``p`` lie strictly inside (-B, B), B = 1 + max|a_i|/|a_n|."""
    if p.is_zero or p.degree == 0:
        raise ValueError("root bound requires a nonconstant polynomial")
    lead = abs(p.leading_coefficient)
    rest = [abs(c) for c in p.coeffs[:-1]]
    return 1 + (max(rest) / lead if rest else Fraction(0))


def _power_of_two_at_least(x: Fraction) -> Fraction:
    """Smallest power of two >= x, so bisection points stay dyadic."""
    e = 0
    while Fraction(2) ** e < x:
        e += 1
    return Fraction(2) ** e


# Skip the rational-root sweep when divisor enumeration would get expensive;
# roots stay correctly isolated, just not recognized as exact rationals.
_SWEEP_COEFF_CAP = 10**6
_SWEEP_CANDIDATE_CAP = 4096


def _divisors(n: int) -> list[int]:
    """Positive divisors of n > 0 by trial division."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots_capped(q: Poly) -> list[Fraction]:
    """All rational roots of square-free ``q``, found via candidate divisors.

    A root at zero is always detected; the divisor sweep for the remaining
    candidates runs only while the integer-cleared constant and leading
    coefficients stay small.
    """
    found = []
    if q.coefficient(0) == 0:
        found.append(Fraction(0))
        q = q.exact_div(Poly([0, 1]))
    if q.degree is None or q.degree < 1:
        return found
    ints = _int_clear(q)
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > _SWEEP_COEFF_CAP or an > _SWEEP_COEFF_CAP:
        return found
    nums = _divisors(a0)
    dens = _divisors(an)
    if len(nums) * len(dens) > _SWEEP_CANDIDATE_CAP:
        return found
    seen = set()
    for num in nums:
        for den in dens:
            cand = Fraction(num, den)
            if cand in seen:
                continue
            seen.add(cand)
            for signed in (cand, -cand):
                if _sign_at(ints, signed) == 0:
                    found.append(signed)
    return found


def _int_clear(p: Poly) -> tuple[int, ...]:
    """Integer coefficients of a positive rational multiple of ``p``.

    Clears denominators and divides out the content; all sign queries on the
    result agree with those on ``p``.
    """
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c.numerator) * (den // c.denominator) for c in p.coeffs]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return tuple(ints)


def _sign_at(int_coeffs: tuple[int, ...], x: Fraction) -> int:
    """Sign of the polynomial with the given integer coefficients at x.

    Evaluates the numerator of the scaled Horner form only, avoiding
    rational normalization.
    """
    num, den = x.numerator, x.denominator
    acc = int_coeffs[-1]
    spow = 1
    for c in reversed(int_coeffs[:-1]):
        spow *= den
        acc = acc * num + c * spow
    return (acc > 0) - (acc < 0)


def _descartes_variations(int_coeffs: tuple[int, ...], lo: Fraction, hi: Fraction) -> int:
    """Sign variations of the (lo, hi) -> (0, oo) rescaling.

    The count bounds the number of roots in the open interval (lo, hi), is
    correct modulo 2, and the values 0 and 1 are decisive.  All arithmetic is
    over the integers: the substitution x -> (lo + hi x)/(1 + x) is expanded
    as sum_i a_i (A + B x)^i (1 + x)^(n-i) s^(n-i) with lo + hi x =
    (A + B x)/s over a common denominator s > 0.
    """
    n = len(int_coeffs) - 1
    s = lo.denominator * hi.denominator // math.gcd(lo.denominator, hi.denominator)
    big_a = int(lo * s)
    big_b = int(hi * s)
    acc = [0] * (n + 1)
    base_pow = [1]  # (A + B x)^i
    for i, ai in enumerate(int_coeffs):
        if ai:
            w = ai * s ** (n - i)
            for j1, c1 in enumerate(base_pow):
                if c1:
                    wc = w * c1
                    for j2 in range(n - i + 1):
                        acc[j1 + j2] += wc * math.comb(n - i, j2)
        if i < n:
            nxt = [0] * (len(base_pow) + 1)
            for j, c in enumerate(base_pow):
                if c:
                    nxt[j] += c * big_a
                    nxt[j + 1] += c * big_b
            base_pow = nxt
    signs = [(v > 0) - (v < 0) for v in acc if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class RealRoot:
    """A single real root, either an exact rational or isolated in an open interval.

    For interval roots, ``poly`` is square-free, nonzero at both endpoints,
    and has exactly one root in (lo, hi); the endpoint signs therefore differ
    and bisection refines the enclosure indefinitely.  Sign queries run on a
    cached integer-cleared coefficient vector.
    """

    __slots__ = ("poly", "lo", "hi", "_ints", "_sign_lo")

    def __init__(self, poly: Poly | None, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self._ints = _int_clear(poly) if poly is not None else None
        self._sign_lo = _sign_at(self._ints, lo) if poly is not None else 0

    @staticmethod
    def exact(value: Fraction) -> "RealRoot":
        return RealRoot(None, value, value)

    def _set_poly(self, poly: Poly, ints: tuple[int, ...]) -> None:
        self.poly = poly
        self._ints = ints
        self._sign_lo = _sign_at(ints, self.lo)

    @property
    def is_exact(self) -> bool:
        return self.poly is None

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("root is not known exactly")
        return self.lo

    def refine(self) -> None:
        """Halve the enclosing interval (turns into an exact root if bisection hits it)."""
        if self.is_exact:
            return
        mid = (self.lo + self.hi) / 2
        s = _sign_at(self._ints, mid)
        if s == 0:
            self.poly = None
            self._ints = None
            self.lo = self.hi = mid
            self._sign_lo = 0
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_below(self, width: Fraction) -> None:
        while not self.is_exact and self.hi - self.lo > width:
            self.refine()

    def __repr__(self) -> str:
        if self.is_exact:
            return f"RealRoot(={self.lo})"
        return f"RealRoot(({self.lo}, {self.hi}))"


def _roots_equal(r1: RealRoot, r2: RealRoot) -> bool:
    """Exact equality test for two isolated roots with overlapping intervals."""
    if r1.is_exact and r2.is_exact:
        return r1.lo == r2.lo
    if r1.is_exact:
        return r2.poly.evaluate(r1.lo) == 0 and r2.lo < r1.lo < r2.hi
    if r2.is_exact:
        return r1.poly.evaluate(r2.lo) == 0 and r1.lo < r2.lo < r1.hi
    lo = max(r1.lo, r2.lo)
    hi = min(r1.hi, r2.hi)
    if lo >= hi:
        return False
    g = gcd(r1.poly, r2.poly)
    if g.degree == 0:
        return False
    # A common root inside both isolating intervals is the root of each.
    return count_real_roots(g, lo, hi) > 0


def compare_roots(r1: RealRoot, r2: RealRoot) -> int:
    """Exact three-way comparison (-1, 0, 1) of two isolated real roots.

    Interval enclosures are open (the root never sits on an endpoint), so
    once equality is excluded, touching intervals already decide the order.
    """
    if _roots_equal(r1, r2):
        return 0
    while True:
        if r1.hi <= r2.lo:
            return -1
        if r2.hi <= r1.lo:
            return 1
        r1.refine()
        r2.refine()


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint, ascending isolating intervals for all real roots.

    Each interval contains exactly one distinct real root of the queried
    polynomial; entries with lo == hi are exact rational roots.  Multiplicities
    sum to the number of real roots counted with multiplicity.
    """

    intervals: tuple[RootInterval, ...]

    @property
    def exact_roots(self) -> tuple[tuple[Fraction, int], ...]:
        """Rational roots recognized exactly, with multiplicity."""
        return tuple(
            (iv.lo, iv.multiplicity) for iv in self.intervals if iv.is_exact
        )

    @property
    def count_with_multiplicity(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)

    @property
    def count_distinct(self) -> int:
        return len(self.intervals)


def _isolate_square_free(q: Poly) -> list[RealRoot]:
    """Isolating intervals/exact values for all real roots of square-free q."""
    if q.degree == 0:
        return []
    roots: list[RealRoot] = [RealRoot.exact(r) for r in _rational_roots_capped(q)]
    work = q
    for r in roots:
        work = work.exact_div(Poly([-r.lo, 1]))
    if work.degree == 0:
        return roots
    bound = _power_of_two_at_least(cauchy_bound(work))
    work_ints = _int_clear(work)
    # Exact rational roots found at bisection points are divided out of the
    # working polynomial; remaining roots are unaffected.
    stack: list[tuple[Fraction, Fraction]] = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        if work.degree == 0:
            continue
        v = _descartes_variations(work_ints, lo, hi)
        if v == 0:
            continue
        if v == 1:
            roots.append(RealRoot(work, lo, hi))
            continue
        mid = (lo + hi) / 2
        if _sign_at(work_ints, mid) == 0:
            roots.append(RealRoot.exact(mid))
            work = work.exact_div(Poly([-mid, 1]))
            work_ints = _int_clear(work)
            for r in roots:
                if not r.is_exact:
                    # deflation removed a root outside (r.lo, r.hi)
                    r._set_poly(work, work_ints)
        stack.append((lo, mid))
        stack.append((mid, hi))
    return roots


def isolate_roots(p: Poly, max_width: Fraction = DEFAULT_MAX_WIDTH) -> RootIsolation:
    """Isolate all real roots of ``p`` with multiplicities.

    Square-free factorization first, bisection per factor, then a global
    refinement pass so the reported intervals are pairwise disjoint, sorted
    ascending, and no wider than ``max_width``.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        raise ValueError("cannot isolate roots of a constant polynomial")
    located: list[tuple[RealRoot, int]] = []
    for factor, mult in yun_decomposition(p):
        for root in _isolate_square_free(factor):
            located.append((root, mult))
    # compare_roots refines as a side effect until every pair is separated
    located.sort(key=_RootKey)
    for root, _ in located:
        root.refine_below(max_width)
    for (r1, _), (r2, _) in zip(located, located[1:]):
        while not r1.hi < r2.lo:
            r1.refine()
            r2.refine()
    intervals = tuple(
        RootInterval(lo=r.lo, hi=r.hi, multiplicity=m) for r, m in located
    )
    return RootIsolation(intervals)


class _RootKey:
    """Sort adapter running the exact comparison."""

    def __init__(self, item: tuple[RealRoot, int]):
        self.root = item[0]

    def __lt__(self, other: "_RootKey") -> bool:
        return compare_roots(self.root, other.root) < 0


def real_roots_with_multiplicity(p: Poly) -> list[tuple[RealRoot, int]]:
    """All real roots ascending as comparable ``RealRoot`` handles with multiplicity."""
    if p.is_zero or p.degree == 0:
        return []
    located: list[tuple[RealRoot, int]] = []
    for factor, mult in yun_decomposition(p):
        for root in _isolate_square_free(factor):
            located.append((root, mult))
    located.sort(key=_RootKey)
    return located
