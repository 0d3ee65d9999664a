"""Exact rational arithmetic and a dense univariate polynomial kernel.

Coefficients are `fractions.Fraction` values (arbitrary precision, always in
lowest terms, denominator >= 1), stored dense in ascending degree order.  The
canonical form never stores trailing zero coefficients; the zero polynomial
has an empty coefficient tuple and degree ``None``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Coefficient = Union[int, Fraction]


def rational(value: int | str | Fraction, den: int | None = None) -> Fraction:
    """Build an exact rational from an int, a Fraction, or a "num/den" string."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def comb0(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


class Poly:
    """Dense univariate polynomial over the rationals, immutable.

    ``Poly([1, 0, 7])`` is 1 + 7x^2.  All arithmetic is exact; results are
    normalized (no trailing zeros) on construction.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def monomial(power: int, coeff: Coefficient = 1) -> "Poly":
        """coeff * x**power."""
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return Poly([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial; ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the stored range)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices with nonzero coefficient, ascending."""
        return tuple(i for i, c in enumerate(self._coeffs) if c != 0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly | Coefficient") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb != 0:
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: Coefficient) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly()
        return Poly([a * c for a in self._coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero:
            return Poly()
        return Poly([Fraction(0)] * k + list(self._coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self, order: int = 1) -> "Poly":
        """Exact derivative of the given order (zero when order > degree)."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self._coeffs
        for _ in range(order):
            if len(cs) <= 1:
                return Poly()
            cs = tuple(i * c for i, c in enumerate(cs) if i > 0)
        return Poly(cs)

    def evaluate(self, x: Coefficient) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Exact composition self(inner(x)) by Horner's rule."""
        acc = Poly()
        for c in reversed(self._coeffs):
            acc = acc * inner + Poly([c])
        return acc

    # -- division -------------------------------------------------------------

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        d = other.degree
        lead = other._coeffs[-1]
        if len(rem) - 1 < d:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            q = rem[i] / lead
            quo[i - d] = q
            for j, c in enumerate(other._coeffs):
                rem[i - d + j] -= q * c
        return Poly(quo), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        """Division known to be exact; raises ``ValueError`` on a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self._coeffs[-1])

    # -- text -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Poly, var: str = "x") -> str:
    """Human-readable form like ``8x^3 + 10x^2 + 3x + 1`` (descending powers)."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def add(a: Poly, b: Poly) -> Poly:
    """Coefficientwise sum in canonical form."""
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    """Exact convolution product."""
    return a * b


def derivative(p: Poly, order: int = 1) -> Poly:
    return p.derivative(order)


def evaluate(p: Poly, x: Coefficient) -> Fraction:
    return p.evaluate(x)


def reverse(h: Poly, d: int) -> Poly:
    """Coefficient reversal x^d * h(1/x); requires deg h <= d.

    An involution at fixed d: coefficient i of the result is coefficient
    d - i of the input (zero-padded).
    """
    if d < 0:
        raise ValueError("reversal degree must be nonnegative")
    if not h.is_zero and h.degree > d:
        raise ValueError(f"degree overflow: deg h = {h.degree} > d = {d}")
    return Poly([h.coefficient(d - i) for i in range(d + 1)])


def reflect(f: Poly, d: int) -> Poly:
    """The reflection (-1)^d * f(-x-1); requires deg f <= d.

    An involution at fixed d.  In the basis x^i (x+1)^(d-i) it swaps the
    coordinates i and d-i, mirroring what `reverse` does for plain
    coefficients.
    """
    if d < 0:
        raise ValueError("reflection degree must be nonnegative")
    if not f.is_zero and f.degree > d:
        raise ValueError(f"degree overflow: deg f = {f.degree} > d = {d}")
    composed = f.compose(Poly([-1, -1]))
    return composed if d % 2 == 0 else -composed


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    # Remainders are made monic at each step to keep coefficients small.
    a, b = a.monic(), b.monic()
    while not b.is_zero:
        _, r = divmod(a, b)
        a, b = b, r.monic()
    return a


class TaggedPoly:
    """A polynomial paired with the reference degree it is a numerator for.

    The tag is the degree of the interpolating polynomial whose generating
    function the `poly` is the numerator of; it drives every degree-dependent
    operator (reversal, reflection, basis changes, homogenization).
    """

    __slots__ = ("poly", "ref_degree")

    def __init__(self, poly: Poly, ref_degree: int):
        if ref_degree < 0:
            raise ValueError("reference degree must be nonnegative")
        if not poly.is_zero and poly.degree > ref_degree:
            raise ValueError(
                f"tag violation: deg = {poly.degree} exceeds reference degree {ref_degree}"
            )
        self.poly = poly
        self.ref_degree = ref_degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TaggedPoly):
            return NotImplemented
        return self.poly == other.poly and self.ref_degree == other.ref_degree

    def __hash__(self) -> int:
        return hash((self.poly, self.ref_degree))

    def __repr__(self) -> str:
        return f"TaggedPoly({self.poly!r}, ref_degree={self.ref_degree})"

    def __str__(self) -> str:
        return f"({self.poly}, d={self.ref_degree})"
