"""Exact decision procedures for coefficient and root properties.

Every check returns a ``PropertyReport`` whose ``witness`` explains a failure
in machine-readable form (an index, an index pair, or a root bound), or
raises ``ValueError`` when a precondition is violated.  No floating point is
used anywhere; root queries go through Sturm chains and exact isolation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, comb0, reverse
from .roots import (
    RootIsolation,
    compare_roots,
    count_real_roots,
    isolate_roots,
    real_roots_with_multiplicity,
    square_free_part,
)

__all__ = [
    "PropertyReport",
    "SymmetryCertificate",
    "RootIsolation",
    "isolate_roots",
    "has_internal_zeros",
    "is_log_concave",
    "is_unimodal",
    "is_ulc",
    "is_real_rooted",
    "interlaces",
    "symmetry_certificate",
    "check_functional_eq",
    "gamma_expand",
    "gamma_contract",
    "is_gamma_positive",
]


@dataclass(frozen=True)
class PropertyReport:
    """Verdict of a property check plus a witness for failures."""

    holds: bool
    witness: dict | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    @staticmethod
    def passed(detail: str = "") -> "PropertyReport":
        return PropertyReport(True, None, detail)

    @staticmethod
    def failed(witness: dict, detail: str = "") -> "PropertyReport":
        return PropertyReport(False, witness, detail)


def _require_nonnegative(h: Poly) -> None:
    for i, c in enumerate(h.coeffs):
        if c < 0:
            raise ValueError(f"negative coefficient {c} at index {i}")


def has_internal_zeros(h: Poly) -> PropertyReport:
    """Verdict holds when the support of ``h`` is a contiguous block of indices.

    A failure witness is a triple i < j < k with h_i, h_k nonzero but h_j = 0.
    Requires nonnegative coefficients.
    """
    _require_nonnegative(h)
    supp = h.support
    if len(supp) <= 1:
        return PropertyReport.passed("support has at most one element")
    lo, hi = supp[0], supp[-1]
    for j in range(lo + 1, hi):
        if h.coefficient(j) == 0:
            return PropertyReport.failed(
                {"i": lo, "j": j, "k": hi},
                f"coefficient {j} vanishes between nonzero coefficients {lo} and {hi}",
            )
    return PropertyReport.passed("support is contiguous")


def is_log_concave(h: Poly) -> PropertyReport:
    """a_j^2 >= a_(j-1) a_(j+1) for every interior index j (nonnegative input)."""
    _require_nonnegative(h)
    cs = h.coeffs
    for j in range(1, len(cs) - 1):
        if cs[j] * cs[j] < cs[j - 1] * cs[j + 1]:
            return PropertyReport.failed(
                {"index": j},
                f"a_{j}^2 = {cs[j] ** 2} < a_{j - 1} a_{j + 1} = {cs[j - 1] * cs[j + 1]}",
            )
    return PropertyReport.passed()


def is_unimodal(h: Poly) -> PropertyReport:
    """Coefficients rise then fall; witness is the first descent-then-ascent pair."""
    _require_nonnegative(h)
    cs = h.coeffs
    descent = None
    for i in range(len(cs) - 1):
        if descent is None and cs[i] > cs[i + 1]:
            descent = i
        elif descent is not None and cs[i] < cs[i + 1]:
            return PropertyReport.failed(
                {"descent": descent, "ascent": i},
                f"coefficients fall at index {descent} and rise again at index {i}",
            )
    return PropertyReport.passed()


def is_ulc(h: Poly, m: int) -> PropertyReport:
    """Membership in ULC(m): a_j / C(m, j) log-concave and no internal zeros.

    Requires m >= deg h and nonnegative coefficients.
    """
    _require_nonnegative(h)
    if not h.is_zero and h.degree > m:
        raise ValueError(f"order {m} is smaller than the degree {h.degree}")
    gaps = has_internal_zeros(h)
    if not gaps.holds:
        return PropertyReport.failed(
            dict(gaps.witness or {}, reason="internal zeros"),
            "support is not contiguous",
        )
    cs = h.coeffs
    for j in range(1, len(cs) - 1):
        lhs = (cs[j] / comb0(m, j)) ** 2
        rhs = (cs[j - 1] / comb0(m, j - 1)) * (cs[j + 1] / comb0(m, j + 1))
        if lhs < rhs:
            return PropertyReport.failed(
                {"index": j},
                f"normalized sequence fails log-concavity at index {j}",
            )
    return PropertyReport.passed()


def is_real_rooted(p: Poly) -> PropertyReport:
    """All complex zeros of ``p`` are real (constants hold vacuously).

    Decided by comparing the Sturm count of distinct real roots of the
    square-free part against its degree.
    """
    if p.is_zero:
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    if p.degree == 0:
        return PropertyReport.passed("constant polynomial")
    q = square_free_part(p)
    found = count_real_roots(q)
    if found == q.degree:
        return PropertyReport.passed()
    return PropertyReport.failed(
        {"distinct_real_roots": found, "distinct_roots_needed": q.degree},
        f"only {found} of {q.degree} distinct roots are real",
    )


def _root_bound_str(root) -> str:
    if root.is_exact:
        return str(root.lo)
    return f"({root.lo}, {root.hi})"


def interlaces(b: Poly, a: Poly) -> PropertyReport:
    """Do the roots of ``b`` interlace those of ``a``?

    With the roots of a sorted descending s_1 >= s_2 >= ... and those of b
    descending t_1 >= t_2 >= ..., the condition is

        ... <= t_2 <= s_2 <= t_1 <= s_1,

    which forces deg b in {deg a - 1, deg a}.  The zero polynomial interlaces
    and is interlaced by everything.  Raises on non-real-rooted input.
    """
    if a.is_zero or b.is_zero:
        return PropertyReport.passed("zero polynomial convention")
    for name, p in (("a", a), ("b", b)):
        if not is_real_rooted(p).holds:
            raise ValueError(f"non-real-rooted input: {name} = {p}")
    deg_a, deg_b = a.degree, b.degree
    if deg_a == 0 and deg_b == 0:
        return PropertyReport.passed("both constant")
    if deg_b not in (deg_a - 1, deg_a):
        return PropertyReport.failed(
            {"deg_a": deg_a, "deg_b": deg_b},
            f"degree mismatch: deg b = {deg_b} not in {{{deg_a - 1}, {deg_a}}}",
        )
    s = _descending_roots(a)
    t = _descending_roots(b)
    # t_i <= s_i and s_(i+1) <= t_i, indices starting at 1
    for i in range(len(t)):
        if compare_roots(t[i], s[i]) > 0:
            return PropertyReport.failed(
                {"index": i + 1, "root_of_b": _root_bound_str(t[i]),
                 "root_of_a": _root_bound_str(s[i])},
                f"t_{i + 1} > s_{i + 1}",
            )
        if i + 1 < len(s) and compare_roots(s[i + 1], t[i]) > 0:
            return PropertyReport.failed(
                {"index": i + 1, "root_of_a": _root_bound_str(s[i + 1]),
                 "root_of_b": _root_bound_str(t[i])},
                f"s_{i + 2} > t_{i + 1}",
            )
    return PropertyReport.passed()


def _descending_roots(p: Poly):
    roots = []
    for root, mult in real_roots_with_multiplicity(p):
        roots.extend([root] * mult)
    roots.reverse()
    return roots


@dataclass(frozen=True)
class SymmetryCertificate:
    """Certifies reverse(h, s) == h; the center of symmetry is s/2.

    ``defect`` is d - s for the reference degree d the caller supplied, or
    ``None`` when no reference degree was given.
    """

    center_numerator: int
    defect: int | None = None


def symmetry_certificate(h: Poly, ref_degree: int | None = None):
    """Return a certificate iff ``h`` equals its own reversal, else ``None``.

    The only candidate axis is s = min supp + max supp; the defect is
    computed only when a reference degree is supplied.
    """
    if h.is_zero:
        raise ValueError("symmetry of the zero polynomial is undefined")
    supp = h.support
    s = supp[0] + supp[-1]
    if reverse(h, s) != h:
        return None
    defect = None
    if ref_degree is not None:
        if ref_degree < s:
            raise ValueError(f"reference degree {ref_degree} is below the axis {s}")
        defect = ref_degree - s
    return SymmetryCertificate(center_numerator=s, defect=defect)


def check_functional_eq(p: Poly, s: int) -> PropertyReport:
    """Does p satisfy (-1)^d p(-(x + d + 1 - s)) = p(x), d = deg p?

    This identity holds exactly when the numerator of p's generating function
    equals its own degree-s reversal.
    """
    if p.is_zero:
        raise ValueError("functional equation of the zero polynomial is undefined")
    d = p.degree
    if not 0 <= s <= d:
        raise ValueError(f"axis {s} must satisfy 0 <= s <= deg p = {d}")
    shifted = p.compose(Poly([-(d + 1 - s), -1]))
    if d % 2 == 1:
        shifted = -shifted
    if shifted == p:
        return PropertyReport.passed()
    diff = shifted - p
    j = diff.support[0]
    return PropertyReport.failed(
        {"index": j},
        f"sides differ first at coefficient {j}",
    )


def gamma_expand(h: Poly, s: int) -> Poly:
    """Coordinates of a symmetric polynomial in the basis x^i (1+x)^(s-2i).

    Requires reverse(h, s) == h; the result has degree at most floor(s/2).
    Computed by subtracting gamma_i x^i (1+x)^(s-2i) from the lowest index up.
    """
    if s < 0:
        raise ValueError("axis must be nonnegative")
    if h.is_zero:
        return Poly()
    if h.degree > s or reverse(h, s) != h:
        raise ValueError(f"asymmetric input: reverse at degree {s} differs")
    rem = h
    coeffs = []
    for i in range(s // 2 + 1):
        g = rem.coefficient(i)
        coeffs.append(g)
        if g != 0:
            rem = rem - Poly.monomial(i, g) * Poly([1, 1]) ** (s - 2 * i)
    if not rem.is_zero:
        raise RuntimeError("internal error: gamma expansion left a remainder")
    return Poly(coeffs)


def gamma_contract(g: Poly, s: int) -> Poly:
    """sum_i g_i x^i (1+x)^(s-2i); exact inverse of ``gamma_expand`` at fixed s."""
    if s < 0:
        raise ValueError("axis must be nonnegative")
    if not g.is_zero and g.degree > s // 2:
        raise ValueError(
            f"degree overflow: deg = {g.degree} exceeds floor(s/2) = {s // 2}"
        )
    acc = Poly()
    for i, c in enumerate(g.coeffs):
        if c != 0:
            acc = acc + Poly.monomial(i, c) * Poly([1, 1]) ** (s - 2 * i)
    return acc


def is_gamma_positive(h: Poly, s: int) -> PropertyReport:
    """All coordinates of the degree-s gamma expansion are nonnegative."""
    g = gamma_expand(h, s)
    for i, c in enumerate(g.coeffs):
        if c < 0:
            return PropertyReport.failed(
                {"index": i, "value": str(c)},
                f"gamma coordinate {i} is {c}",
            )
    return PropertyReport.passed()
