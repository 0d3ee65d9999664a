"""Symmetric decompositions of numerators and of f-polynomials.

Any polynomial h of degree at most d splits uniquely as h = a + x*b with
a equal to its own degree-d reversal and b equal to its own degree-(d-1)
reversal.  On the f-polynomial side the same split uses the reflection
(-1)^d f(-x-1) instead of coefficient reversal, and the two decompositions
are carried into each other by the h <-> f basis change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analysis import PropertyReport, interlaces, is_gamma_positive, is_real_rooted
from .operators import diamond
from .poly import Poly, reflect, reverse


@dataclass(frozen=True)
class SymDecomp:
    """Pair (a, b) with h = a + x*b, reverse(a, d) = a, reverse(b, d-1) = b."""

    a: Poly
    b: Poly
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("decomposition degree must be nonnegative")
        if reverse(self.a, self.d) != self.a:
            raise ValueError(f"a is not its own reversal at degree {self.d}")
        if self.d >= 1 and reverse(self.b, self.d - 1) != self.b:
            raise ValueError(f"b is not its own reversal at degree {self.d - 1}")
        if self.d == 0 and not self.b.is_zero:
            raise ValueError("a degree-0 decomposition forces b = 0")

    def reconstruct(self) -> Poly:
        return self.a + self.b.shift_up(1)


def i_decompose(h: Poly, d: int) -> SymDecomp:
    """The unique symmetric decomposition of h at reference degree d.

    Solved by the triangular recurrence a_0 = h_0, b_i = h_(d-i) - a_i,
    a_i = h_i - b_(i-1); the reconstruction h = a + x*b is re-checked.
    """
    if not h.is_zero and h.degree > d:
        raise ValueError(f"degree overflow: deg h = {h.degree} > d = {d}")
    a = []
    b = []
    prev_b = Fraction(0)
    for i in range(d + 1):
        ai = h.coefficient(i) - prev_b
        a.append(ai)
        if i < d:
            prev_b = h.coefficient(d - i) - ai
            b.append(prev_b)
    dec = SymDecomp(Poly(a), Poly(b), d)
    if dec.reconstruct() != h:
        raise RuntimeError("internal error: decomposition does not reconstruct input")
    return dec


def r_decompose(f: Poly, d: int) -> tuple[Poly, Poly]:
    """Reflection-symmetric split of an f-polynomial at reference degree d.

    Returns (a~, b~) with a~ = (x+1) f - x * reflect(f, d) and
    b~ = reflect(f, d) - f, so that f = a~ + x b~, reflect(a~, d) = a~ and
    reflect(b~, d-1) = b~.
    """
    if not f.is_zero and f.degree > d:
        raise ValueError(f"degree overflow: deg f = {f.degree} > d = {d}")
    rf = reflect(f, d)
    a = Poly([1, 1]) * f - Poly.x() * rf
    b = rf - f
    return a, b


def defect1_ell(b1: Poly, d1: int, b2: Poly, d2: int) -> Poly:
    """The common symmetric factor of the two diamond products of shifted b's.

    For b1, b2 equal to their own reflections at degrees d1 - 1 and d2 - 1,
    there is a unique ell with reflect(ell, d1 + d2 - 1) = ell satisfying

        ((x+1) b1) <> ((x+1) b2) = (x+1) ell    and
        (x b1) <> (x b2) = x ell.

    Computed by exact division of the first product by (x+1); inexact
    division or broken symmetry signals an implementation bug and aborts.
    """
    if d1 < 1 or d2 < 1:
        raise ValueError("reference degrees must be at least 1")
    if reflect(b1, d1 - 1) != b1:
        raise ValueError(f"b1 is not its own reflection at degree {d1 - 1}")
    if reflect(b2, d2 - 1) != b2:
        raise ValueError(f"b2 is not its own reflection at degree {d2 - 1}")
    if b1.is_zero or b2.is_zero:
        return Poly()
    shifted = diamond(Poly([1, 1]) * b1, Poly([1, 1]) * b2)
    quotient, remainder = divmod(shifted, Poly([1, 1]))
    if not remainder.is_zero:
        raise RuntimeError(
            "internal error: ((x+1)b1 <> (x+1)b2) is not divisible by (x+1)"
        )
    if reflect(quotient, d1 + d2 - 1) != quotient:
        raise RuntimeError("internal error: quotient lost reflection symmetry")
    return quotient


def decomposition_is_nonnegative(dec: SymDecomp) -> PropertyReport:
    """Both halves have only nonnegative coefficients."""
    for name, p in (("a", dec.a), ("b", dec.b)):
        for i, c in enumerate(p.coeffs):
            if c < 0:
                return PropertyReport.failed(
                    {"part": name, "index": i, "value": str(c)},
                    f"coefficient {i} of {name} is {c}",
                )
    return PropertyReport.passed()


def decomposition_is_interlacing(dec: SymDecomp) -> PropertyReport:
    """Both halves are real-rooted and the roots of b interlace those of a."""
    for name, p in (("a", dec.a), ("b", dec.b)):
        if not p.is_zero and not is_real_rooted(p).holds:
            return PropertyReport.failed(
                {"part": name, "reason": "not real-rooted"},
                f"{name} is not real-rooted",
            )
    return interlaces(dec.b, dec.a)


def decomposition_is_gamma_positive(dec: SymDecomp) -> PropertyReport:
    """Both halves have nonnegative gamma coordinates (axes d and d-1)."""
    rep_a = is_gamma_positive(dec.a, dec.d)
    if not rep_a.holds:
        return PropertyReport.failed(
            dict(rep_a.witness or {}, part="a"), f"a: {rep_a.detail}"
        )
    if dec.d >= 1:
        rep_b = is_gamma_positive(dec.b, dec.d - 1)
        if not rep_b.holds:
            return PropertyReport.failed(
                dict(rep_b.witness or {}, part="b"), f"b: {rep_b.detail}"
            )
    return PropertyReport.passed()
