"""Operator calculus on numerators of polynomial-interpolated power series.

For a polynomial p of degree d, the series sum_j p(j) x^j is rational with
denominator (1-x)^(d+1); its numerator h = w_transform(p) has degree at most
d.  This module implements that transform and its inverse, the subdivision
operator (binomial basis C(x,j) -> x^j), conversions between a numerator h
and its f-polynomial f = sum_i h_i x^i (x+1)^(d-i), and three independent
realizations of the Hadamard product of two tagged numerators:

* direct    -- multiply the interpolating polynomials and re-extract the
               numerator (the production route),
* bullet    -- the bilinear product on homogenized coefficient vectors given
               by an explicit binomial formula on monomials,
* diamond   -- transport to f-polynomials, where the Hadamard product becomes
               (f <> g)(x) = sum_j f^(j) g^(j) / (j!)^2 * x^j (x+1)^j.

All three agree exactly; the tests cross-check them against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, TaggedPoly, comb0


@dataclass(frozen=True)
class HomogRep:
    """Homogeneous bivariate representation: coeffs[i] multiplies x^i y^(d-i).

    Unlike ``Poly`` the coefficient vector has fixed length degree+1 and may
    carry trailing zeros.
    """

    coeffs: tuple[Fraction, ...]
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("homogeneous degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector must have length degree + 1")


def homogenize(h: Poly, d: int) -> HomogRep:
    """y^d h(x/y): pad the coefficients of h (deg h <= d) to length d+1."""
    if not h.is_zero and h.degree > d:
        raise ValueError(f"degree overflow: deg h = {h.degree} > d = {d}")
    return HomogRep(tuple(h.coefficient(i) for i in range(d + 1)), d)


def dehomogenize(rep: HomogRep) -> TaggedPoly:
    """Set y = 1, trimming trailing zeros; the degree becomes the tag."""
    return TaggedPoly(Poly(rep.coeffs), rep.degree)


def binom_x_plus(a: int, d: int) -> Poly:
    """The polynomial C(x + a, d) = (x+a)(x+a-1)...(x+a-d+1) / d! in x."""
    if d < 0:
        raise ValueError("binomial order must be nonnegative")
    acc = Poly.one()
    for j in range(d):
        acc = acc * Poly([a - j, 1])
    return acc.scale(Fraction(1, math.factorial(d)))


def numerator_at(p: Poly, d: int) -> Poly:
    """Coefficients of p in the basis {C(x + d - i, d)}: the numerator of
    sum_j p(j) x^j over (1-x)^(d+1).

    Computed as the finite convolution of the value sequence p(0..d) with the
    expansion of (1-x)^(d+1); requires deg p <= d.
    """
    if not p.is_zero and p.degree > d:
        raise ValueError(f"degree overflow: deg p = {p.degree} > d = {d}")
    values = [p.evaluate(j) for j in range(d + 1)]
    signed = [Fraction((-1) ** k * math.comb(d + 1, k)) for k in range(d + 2)]
    coeffs = []
    for i in range(d + 1):
        coeffs.append(sum(signed[k] * values[i - k] for k in range(i + 1)))
    return Poly(coeffs)


def w_transform(p: Poly) -> TaggedPoly:
    """Numerator h of sum_j p(j) x^j = h(x) / (1-x)^(deg p + 1), tagged deg p."""
    if p.is_zero:
        raise ValueError("numerator transform of the zero polynomial is undefined")
    d = p.degree
    return TaggedPoly(numerator_at(p, d), d)


def w_inverse(h: Poly, d: int) -> Poly:
    """The polynomial p = sum_i h_i C(x + d - i, d), so w_transform(p) = (h, d).

    Synthesizes the binomial basis explicitly; deg p = d whenever the
    coefficients of h do not sum to zero.
    """
    if not h.is_zero and h.degree > d:
        raise ValueError(f"degree overflow: deg h = {h.degree} > d = {d}")
    acc = Poly()
    for i, c in enumerate(h.coeffs):
        if c != 0:
            acc = acc + binom_x_plus(d - i, d).scale(c)
    return acc


def subdivision(p: Poly) -> Poly:
    """Rewrite p in the binomial basis C(x, j) and substitute x^j for C(x, j).

    The coordinates are the iterated forward differences of p at 0, so the
    result is sum_j (Delta^j p)(0) x^j.
    """
    if p.is_zero:
        return Poly()
    values = [p.evaluate(j) for j in range(p.degree + 1)]
    coeffs = []
    while values:
        coeffs.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return Poly(coeffs)


def f_from_h(h: Poly, d: int) -> Poly:
    """The f-polynomial sum_i h_i x^i (x+1)^(d-i) = (1+x)^d h(x/(1+x))."""
    if not h.is_zero and h.degree > d:
        raise ValueError(f"degree overflow: deg h = {h.degree} > d = {d}")
    acc = Poly()
    pow_x1 = [Poly.one()]
    for _ in range(d):
        pow_x1.append(pow_x1[-1] * Poly([1, 1]))
    for i, c in enumerate(h.coeffs):
        if c != 0:
            acc = acc + Poly.monomial(i, c) * pow_x1[d - i]
    return acc


def h_from_f(f: Poly, d: int) -> Poly:
    """Coordinates of f in the basis {x^i (x+1)^(d-i)}: (1-x)^d f(x/(1-x))."""
    if not f.is_zero and f.degree > d:
        raise ValueError(f"degree overflow: deg f = {f.degree} > d = {d}")
    acc = Poly()
    pow_1mx = [Poly.one()]
    for _ in range(d):
        pow_1mx.append(pow_1mx[-1] * Poly([1, -1]))
    for i, c in enumerate(f.coeffs):
        if c != 0:
            acc = acc + Poly.monomial(i, c) * pow_1mx[d - i]
    return acc


def bullet_monomial(k: int, a: int, l: int, b: int) -> HomogRep:
    """Product of the basis monomials x^k y^(a-k) and x^l y^(b-l).

    The coefficient of x^i y^(a+b-i) is C(a-k+l, i-k) * C(b-l+k, i-l), with
    binomials vanishing outside their range.
    """
    if not (0 <= k <= a):
        raise ValueError(f"range violation: need 0 <= k <= a, got k={k}, a={a}")
    if not (0 <= l <= b):
        raise ValueError(f"range violation: need 0 <= l <= b, got l={l}, b={b}")
    coeffs = tuple(
        Fraction(comb0(a - k + l, i - k) * comb0(b - l + k, i - l))
        for i in range(a + b + 1)
    )
    return HomogRep(coeffs, a + b)


def bullet(p: HomogRep, q: HomogRep) -> HomogRep:
    """Bilinear extension of ``bullet_monomial`` to whole coefficient vectors."""
    a, b = p.degree, q.degree
    out = [Fraction(0)] * (a + b + 1)
    for k, ck in enumerate(p.coeffs):
        if ck == 0:
            continue
        for l, cl in enumerate(q.coeffs):
            if cl == 0:
                continue
            term = bullet_monomial(k, a, l, b)
            w = ck * cl
            for i, t in enumerate(term.coeffs):
                if t != 0:
                    out[i] += w * t
    return HomogRep(tuple(out), a + b)


def diamond(f: Poly, g: Poly) -> Poly:
    """(f <> g)(x) = sum_j f^(j)(x)/j! * g^(j)(x)/j! * x^j (x+1)^j."""
    if f.is_zero or g.is_zero:
        return Poly()
    acc = Poly()
    xj = Poly.one()
    shift = Poly([0, 1]) * Poly([1, 1])  # x(x+1)
    fj, gj = f, g
    for j in range(min(f.degree, g.degree) + 1):
        if j > 0:
            xj = xj * shift
            fj = fj.derivative()
            gj = gj.derivative()
        scale = Fraction(1, math.factorial(j) ** 2)
        acc = acc + (fj * gj).scale(scale) * xj
    return acc


def diamond_power(f: Poly, k: int) -> Poly:
    """Left fold of the diamond product over k copies of f; requires k >= 1."""
    if k < 1:
        raise ValueError("diamond power requires k >= 1 (no degree-free identity)")
    acc = f
    for _ in range(k - 1):
        acc = diamond(acc, f)
    return acc


def hadamard(t1: TaggedPoly, t2: TaggedPoly, route: str = "direct") -> TaggedPoly:
    """Hadamard product of tagged numerators: (h1, d1) x (h2, d2) -> (h, d1+d2).

    The result is the numerator of sum_j p1(j) p2(j) x^j over
    (1-x)^(d1+d2+1), where p_i = w_inverse(h_i, d_i).  The production path is
    ``route="direct"``; ``"bullet"`` and ``"diamond"`` are independent
    routes kept for cross-verification.
    """
    d1, d2 = t1.ref_degree, t2.ref_degree
    if route == "direct":
        p = w_inverse(t1.poly, d1) * w_inverse(t2.poly, d2)
        return TaggedPoly(numerator_at(p, d1 + d2), d1 + d2)
    if route == "bullet":
        rep = bullet(homogenize(t1.poly, d1), homogenize(t2.poly, d2))
        return dehomogenize(rep)
    if route == "diamond":
        prod = diamond(f_from_h(t1.poly, d1), f_from_h(t2.poly, d2))
        return TaggedPoly(h_from_f(prod, d1 + d2), d1 + d2)
    raise ValueError(f"unknown hadamard route: {route!r}")


def msupp(f: Poly, d: int) -> frozenset[int]:
    """Indices of strictly positive coordinates of f in the basis x^i (x+1)^(d-i).

    Requires all coordinates to be nonnegative (f "magic positive").
    """
    h = h_from_f(f, d)
    for i, c in enumerate(h.coeffs):
        if c < 0:
            raise ValueError(
                f"not magic positive: coordinate {i} of the magic expansion is {c}"
            )
    return frozenset(h.support)
