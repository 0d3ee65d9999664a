"""Command-line surface.

Polynomials are passed as comma-separated coefficients in ascending degree
order ("1,0,7" is 1 + 7x^2); entries may be integers or "num/den" rationals.
Results print in the same format by default, as a JSON object with
``--json``, or human-readable with ``--pretty``.  ``--in FILE`` reads a JSON
object ``{"coeffs": [...], "degree_tag": n}`` instead of ``--poly``.

Exit codes: 0 a computation succeeded / a checked property holds / a verify
suite met its expectation; 1 a checked property fails or a suite found a
violation; 2 malformed input or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, decomp, operators
from .generators import GeneratorExhausted, TrialConfig
from .harness import SUITES, scan_logconcave_pair, verify_reeve
from .poly import Poly, TaggedPoly, format_poly


def parse_poly(text: str) -> Poly:
    """Parse comma-separated ascending coefficients ("1,3/2,0,7")."""
    text = text.strip()
    if not text:
        return Poly()
    try:
        return Poly([Fraction(part.strip()) for part in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from exc


def poly_to_csv(p: Poly) -> str:
    return ",".join(str(c) for c in p.coeffs) if not p.is_zero else "0"


def _poly_spec(p: Poly, degree_tag: int | None = None) -> dict:
    payload: dict = {"coeffs": [str(c) for c in p.coeffs]}
    if degree_tag is not None:
        payload["degree_tag"] = degree_tag
    return payload


def _load_input_file(path: str) -> tuple[Poly, int | None]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError(f"{path}: expected a JSON object with a 'coeffs' field")
    coeffs = [Fraction(str(c)) for c in data["coeffs"]]
    tag = data.get("degree_tag")
    if tag is not None:
        tag = int(tag)
        poly = Poly(coeffs)
        if not poly.is_zero and poly.degree > tag:
            raise ValueError(f"{path}: degree_tag {tag} below the parsed degree")
    return Poly(coeffs), tag


def _emit_poly(args, p: Poly, degree_tag: int | None = None) -> None:
    if getattr(args, "json", False):
        print(json.dumps(_poly_spec(p, degree_tag)))
    elif getattr(args, "pretty", False):
        tag = f"   (tag {degree_tag})" if degree_tag is not None else ""
        print(f"{format_poly(p)}{tag}")
    else:
        print(poly_to_csv(p))


def _input_poly(args) -> Poly:
    if getattr(args, "infile", None):
        poly, _ = _load_input_file(args.infile)
        return poly
    if args.poly is None:
        raise ValueError("missing polynomial: pass --poly or --in FILE")
    return parse_poly(args.poly)


def _add_output_flags(sub) -> None:
    sub.add_argument("--json", action="store_true", help="emit a JSON object")
    sub.add_argument("--pretty", action="store_true", help="human-readable output")


def _add_poly_input(sub) -> None:
    sub.add_argument("--poly", help="comma-separated ascending coefficients")
    sub.add_argument("--in", dest="infile", help="read one JSON polynomial object")


# -- single-operator commands --------------------------------------------------


def cmd_w(args) -> int:
    p = _input_poly(args)
    tagged = operators.w_transform(p)
    _emit_poly(args, tagged.poly, tagged.ref_degree)
    return 0


def cmd_invw(args) -> int:
    h = _input_poly(args)
    _emit_poly(args, operators.w_inverse(h, args.degree))
    return 0


def cmd_f(args) -> int:
    h = _input_poly(args)
    _emit_poly(args, operators.f_from_h(h, args.degree))
    return 0


def cmd_h(args) -> int:
    f = _input_poly(args)
    _emit_poly(args, operators.h_from_f(f, args.degree))
    return 0


def cmd_subdiv(args) -> int:
    p = _input_poly(args)
    _emit_poly(args, operators.subdivision(p))
    return 0


def cmd_hadamard(args) -> int:
    t1 = TaggedPoly(parse_poly(args.a), args.da)
    t2 = TaggedPoly(parse_poly(args.b), args.db)
    out = operators.hadamard(t1, t2, route=args.route)
    _emit_poly(args, out.poly, out.ref_degree)
    return 0


def cmd_diamond(args) -> int:
    f = parse_poly(args.a)
    g = parse_poly(args.b)
    _emit_poly(args, operators.diamond(f, g))
    return 0


def cmd_gamma(args) -> int:
    h = _input_poly(args)
    _emit_poly(args, analysis.gamma_expand(h, args.center))
    return 0


def cmd_symdec(args) -> int:
    h = _input_poly(args)
    dec = decomp.i_decompose(h, args.degree)
    if args.json:
        print(
            json.dumps(
                {
                    "a": [str(c) for c in dec.a.coeffs],
                    "b": [str(c) for c in dec.b.coeffs],
                    "d": dec.d,
                }
            )
        )
    elif args.pretty:
        print(f"a = {format_poly(dec.a)}")
        print(f"b = {format_poly(dec.b)}")
    else:
        print(f"a: {poly_to_csv(dec.a)}")
        print(f"b: {poly_to_csv(dec.b)}")
    return 0


# -- property checks ------------------------------------------------------------


def _check_nonneg(p: Poly) -> analysis.PropertyReport:
    for i, c in enumerate(p.coeffs):
        if c < 0:
            return analysis.PropertyReport.failed(
                {"index": i, "value": str(c)}, f"coefficient {i} is {c}"
            )
    return analysis.PropertyReport.passed()


def cmd_check(args) -> int:
    prop = args.property
    if prop == "interlacing":
        if args.a is None or args.b is None:
            raise ValueError("check interlacing needs --b and --a")
        report = analysis.interlaces(parse_poly(args.b), parse_poly(args.a))
    else:
        p = _input_poly(args)
        if prop == "nonneg":
            report = _check_nonneg(p)
        elif prop == "internal-zeros":
            report = analysis.has_internal_zeros(p)
        elif prop == "unimodal":
            report = analysis.is_unimodal(p)
        elif prop == "logconcave":
            report = analysis.is_log_concave(p)
        elif prop == "ulc":
            if args.order is None:
                raise ValueError("check ulc needs --order")
            report = analysis.is_ulc(p, args.order)
        elif prop == "realrooted":
            report = analysis.is_real_rooted(p)
        elif prop == "gammapos":
            if args.center is None:
                raise ValueError("check gammapos needs --center")
            report = analysis.is_gamma_positive(p, args.center)
        elif prop == "symmetric":
            cert = analysis.symmetry_certificate(p, args.degree)
            if cert is None:
                report = analysis.PropertyReport.failed(
                    {"reason": "no axis"}, "polynomial differs from its reversal"
                )
            else:
                detail = f"axis {cert.center_numerator}"
                if cert.defect is not None:
                    detail += f", defect {cert.defect}"
                report = analysis.PropertyReport.passed(detail)
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(f"unknown property {prop!r}")
    if args.json:
        print(
            json.dumps(
                {"holds": report.holds, "witness": report.witness, "detail": report.detail}
            )
        )
    elif report.holds:
        print(f"holds{': ' + report.detail if report.detail else ''}")
    else:
        print(f"fails: {report.detail}  witness={report.witness}")
    return 0 if report.holds else 1


# -- verification suites ---------------------------------------------------------


def cmd_verify(args) -> int:
    if args.theorem == "reeve":
        result = verify_reeve(args.kmax)
    else:
        config = TrialConfig(
            seed=args.seed,
            trials=args.trials,
            max_degree=args.max_degree,
            max_coefficient=args.max_coefficient,
        )
        result = SUITES[args.theorem](config)
    print(result.render())
    return 0 if result.ok else 1


def cmd_scan(args) -> int:
    config = TrialConfig(
        seed=args.seed,
        trials=args.trials,
        max_degree=args.max_degree,
        max_coefficient=args.max_coefficient,
    )
    result = scan_logconcave_pair(config)
    print(result.render())
    return 0


def _add_trial_flags(sub) -> None:
    sub.add_argument("--seed", type=int, default=1, help="64-bit master seed")
    sub.add_argument("--trials", type=int, default=200)
    sub.add_argument("--max-degree", type=int, default=8)
    sub.add_argument("--max-coefficient", type=int, default=9)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadpoly",
        description=(
            "Exact calculus on numerators of polynomial-interpolated power "
            "series: Hadamard/diamond products, basis changes, coefficient "
            "property checks, and randomized verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, needs_degree, degree_help in (
        ("w", cmd_w, False, None),
        ("invw", cmd_invw, True, "reference degree of the interpolating polynomial"),
        ("f", cmd_f, True, "reference degree for the basis change"),
        ("h", cmd_h, True, "reference degree for the basis change"),
        ("subdiv", cmd_subdiv, False, None),
    ):
        s = sub.add_parser(name)
        _add_poly_input(s)
        if needs_degree:
            s.add_argument("--degree", type=int, required=True, help=degree_help)
        _add_output_flags(s)
        s.set_defaults(fn=fn)

    s = sub.add_parser("hadamard")
    s.add_argument("--a", required=True)
    s.add_argument("--da", type=int, required=True, help="tag of the first factor")
    s.add_argument("--b", required=True)
    s.add_argument("--db", type=int, required=True, help="tag of the second factor")
    s.add_argument(
        "--route",
        choices=["direct", "bullet", "diamond"],
        default="direct",
        help="computation route (bullet/diamond are verification routes)",
    )
    _add_output_flags(s)
    s.set_defaults(fn=cmd_hadamard)

    s = sub.add_parser("diamond")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    _add_output_flags(s)
    s.set_defaults(fn=cmd_diamond)

    s = sub.add_parser("gamma")
    _add_poly_input(s)
    s.add_argument("--center", type=int, required=True, help="symmetry axis s")
    _add_output_flags(s)
    s.set_defaults(fn=cmd_gamma)

    s = sub.add_parser("symdec")
    _add_poly_input(s)
    s.add_argument("--degree", type=int, required=True)
    _add_output_flags(s)
    s.set_defaults(fn=cmd_symdec)

    s = sub.add_parser("check")
    s.add_argument(
        "property",
        choices=[
            "nonneg",
            "internal-zeros",
            "unimodal",
            "logconcave",
            "ulc",
            "realrooted",
            "gammapos",
            "symmetric",
            "interlacing",
        ],
    )
    _add_poly_input(s)
    s.add_argument("--order", type=int, help="order m for the ulc check")
    s.add_argument("--center", type=int, help="axis s for the gammapos check")
    s.add_argument("--degree", type=int, help="reference degree for symmetric")
    s.add_argument("--a", help="interlaced polynomial (interlacing check)")
    s.add_argument("--b", help="interlacing polynomial (interlacing check)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("verify")
    s.add_argument("theorem", choices=sorted(SUITES) + ["reeve"])
    _add_trial_flags(s)
    s.add_argument("--kmax", type=int, default=8, help="highest power (reeve only)")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("scan")
    s.add_argument("target", choices=["logconcave-pair"])
    _add_trial_flags(s)
    s.set_defaults(fn=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GeneratorExhausted as exc:
        print(f"error: instance generation exhausted: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
