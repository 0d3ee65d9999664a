"""Verification suites: seeded random trials for each preservation statement.

Each suite draws instances satisfying a statement's hypothesis, validates
the hypothesis with the exact checker (no vacuous passes), applies the
operator pipeline, and asserts the conclusion.  The statements exercised
here are proved, so any failure is reported as an implementation bug; the
only suite that *expects* pathological behavior is ``reeve``, which confirms
the counterexample family, and the log-concavity pair scan, which hunts for
counterexamples to an open question and reports finds as results.

Trials are independent: trial i uses a generator derived from
(seed, suite key, i), so reports are byte-identical for identical configs
and each trial can be reproduced in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import (
    gamma_contract,
    has_internal_zeros,
    is_gamma_positive,
    is_log_concave,
    is_real_rooted,
    is_ulc,
    symmetry_certificate,
)
from .decomp import (
    decomposition_is_gamma_positive,
    decomposition_is_interlacing,
    decomposition_is_nonnegative,
    i_decompose,
)
from .ehrhart import counterexample_report
from .generators import (
    TrialConfig,
    gen_contiguous_nonneg,
    gen_gamma_positive_symdec,
    gen_interlacing_symdec,
    gen_logconcave,
    gen_nonneg_symdec,
    gen_real_rooted,
    gen_symmetric,
    gen_ulc,
)
from .generators import GeneratorExhausted
from .operators import hadamard
from .poly import TaggedPoly
from .rng import SplitMix64

#: stable per-suite derivation keys; never reorder or reuse
_SUITE_KEYS = {
    "wagner": 1,
    "ulc-preservation": 2,
    "gamma-preservation": 3,
    "symdec-nonneg": 4,
    "symdec-gamma": 5,
    "symdec-interlacing": 6,
    "no-internal-zeros": 7,
    "gamma-implies-ulc": 8,
    "mixed-logconcave": 9,
    "scan-logconcave-pair": 10,
}


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    stage: str  # "hypothesis" or "conclusion"
    detail: str


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    params: tuple[tuple[str, int], ...]
    trials_run: int
    failures: tuple[TrialFailure, ...]
    ok: bool
    summary: str
    findings: tuple[str, ...] = field(default=())

    def render(self) -> str:
        lines = [f"suite: {self.suite}"]
        lines.append("  ".join(f"{k}={v}" for k, v in self.params))
        lines.append(f"trials run: {self.trials_run}")
        lines.append(f"failures: {len(self.failures)}")
        for f in self.failures:
            lines.append(f"  trial {f.trial} [{f.stage}]: {f.detail}")
        for note in self.findings:
            lines.append(f"  finding: {note}")
        lines.append(("PASS: " if self.ok else "FAIL: ") + self.summary)
        return "\n".join(lines)


def _trial_rng(config: TrialConfig, suite: str, trial: int) -> SplitMix64:
    return SplitMix64(config.seed).derive(_SUITE_KEYS[suite], trial)


def _run_pair_suite(name: str, config: TrialConfig, trial_fn) -> SuiteResult:
    failures: list[TrialFailure] = []
    for trial in range(config.trials):
        rng = _trial_rng(config, name, trial)
        try:
            failure = trial_fn(rng, config)
        except GeneratorExhausted as exc:
            raise GeneratorExhausted(
                f"{exc} (suite {name}, seed {config.seed}, trial {trial})"
            ) from exc
        if failure is not None:
            stage, detail = failure
            failures.append(TrialFailure(trial, stage, detail))
    ok = not failures
    summary = (
        "conclusion held in every trial"
        if ok
        else "a proved statement was violated; this indicates a bug in this package"
    )
    return SuiteResult(
        suite=name,
        params=(
            ("seed", config.seed),
            ("trials", config.trials),
            ("max-degree", config.max_degree),
            ("max-coefficient", config.max_coefficient),
        ),
        trials_run=config.trials,
        failures=tuple(failures),
        ok=ok,
        summary=summary,
    )


def verify_wagner(config: TrialConfig) -> SuiteResult:
    """Real-rooted numerators stay real-rooted under the Hadamard product."""

    def trial(rng, cfg):
        tagged = []
        for which in range(2):
            d = rng.randint(0, cfg.max_degree)
            t = gen_real_rooted(rng, d, cfg.max_coefficient)
            if not is_real_rooted(t.poly).holds:
                return "hypothesis", f"factor {which} not real-rooted: {t.poly}"
            tagged.append(t)
        out = hadamard(tagged[0], tagged[1])
        rep = is_real_rooted(out.poly)
        if not rep.holds:
            return "conclusion", f"{out.poly} is not real-rooted: {rep.detail}"
        return None

    return _run_pair_suite("wagner", config, trial)


def verify_ulc_preservation(config: TrialConfig) -> SuiteResult:
    """Order-d ultra log-concavity is preserved, orders adding up."""

    def trial(rng, cfg):
        tagged = []
        for which in range(2):
            d = rng.randint(0, cfg.max_degree)
            t = gen_ulc(rng, d, cfg.max_coefficient)
            if not is_ulc(t.poly, d).holds:
                return "hypothesis", f"factor {which} not ULC({d}): {t.poly}"
            tagged.append(t)
        out = hadamard(tagged[0], tagged[1])
        rep = is_ulc(out.poly, out.ref_degree)
        if not rep.holds:
            return "conclusion", f"{out.poly} not ULC({out.ref_degree}): {rep.detail}"
        return None

    return _run_pair_suite("ulc-preservation", config, trial)


def verify_gamma_preservation(config: TrialConfig) -> SuiteResult:
    """Symmetry with matching defect and gamma-positivity are preserved.

    Also asserts the output defect equals the shared input defect.
    """

    def trial(rng, cfg):
        defect = rng.randint(0, 2)
        tagged = []
        axes = []
        for which in range(2):
            s = rng.randint(0, max(0, cfg.max_degree - defect))
            t = gen_symmetric(rng, s, defect, cfg.max_coefficient)
            cert = symmetry_certificate(t.poly, t.ref_degree)
            if cert is None or cert.center_numerator != s or cert.defect != defect:
                return "hypothesis", f"factor {which} lacks axis {s}, defect {defect}"
            if not is_gamma_positive(t.poly, s).holds:
                return "hypothesis", f"factor {which} not gamma-positive at axis {s}"
            tagged.append(t)
            axes.append(s)
        out = hadamard(tagged[0], tagged[1])
        cert = symmetry_certificate(out.poly, out.ref_degree)
        if cert is None:
            return "conclusion", f"product is not symmetric: {out.poly}"
        if cert.defect != defect:
            return (
                "conclusion",
                f"product defect {cert.defect} differs from input defect {defect}",
            )
        expected_axis = axes[0] + axes[1] + defect
        if cert.center_numerator != expected_axis:
            return (
                "conclusion",
                f"product axis {cert.center_numerator} != {expected_axis}",
            )
        rep = is_gamma_positive(out.poly, cert.center_numerator)
        if not rep.holds:
            return "conclusion", f"product not gamma-positive: {rep.detail}"
        return None

    return _run_pair_suite("gamma-preservation", config, trial)


def _symdec_suite(name: str, generator, predicate, pred_name: str):
    def trial(rng, cfg):
        parts = []
        for which in range(2):
            d = rng.randint(0, cfg.max_degree)
            dec = generator(rng, d, cfg.max_coefficient)
            rep = predicate(dec)
            if not rep.holds:
                return "hypothesis", f"factor {which} fails {pred_name}: {rep.detail}"
            h = dec.reconstruct()
            if h.is_zero:
                return "hypothesis", f"factor {which} reconstructs to zero"
            parts.append(TaggedPoly(h, d))
        out = hadamard(parts[0], parts[1])
        out_dec = i_decompose(out.poly, out.ref_degree)
        rep = predicate(out_dec)
        if not rep.holds:
            return "conclusion", f"product fails {pred_name}: {rep.detail}"
        return None

    def run(config: TrialConfig) -> SuiteResult:
        return _run_pair_suite(name, config, trial)

    return run


def _nonneg_and_interlacing(dec):
    rep = decomposition_is_nonnegative(dec)
    if not rep.holds:
        return rep
    return decomposition_is_interlacing(dec)


verify_symdec_nonneg = _symdec_suite(
    "symdec-nonneg",
    gen_nonneg_symdec,
    decomposition_is_nonnegative,
    "nonnegative decomposition",
)

verify_symdec_gamma = _symdec_suite(
    "symdec-gamma",
    gen_gamma_positive_symdec,
    decomposition_is_gamma_positive,
    "gamma-positive decomposition",
)

verify_symdec_interlacing = _symdec_suite(
    "symdec-interlacing",
    gen_interlacing_symdec,
    _nonneg_and_interlacing,
    "nonnegative interlacing decomposition",
)


def verify_no_internal_zeros(config: TrialConfig) -> SuiteResult:
    """Contiguous support of the numerator is preserved."""

    def trial(rng, cfg):
        tagged = []
        for which in range(2):
            d = rng.randint(0, cfg.max_degree)
            t = gen_contiguous_nonneg(rng, d, cfg.max_coefficient)
            if not has_internal_zeros(t.poly).holds:
                return "hypothesis", f"factor {which} has internal zeros"
            tagged.append(t)
        out = hadamard(tagged[0], tagged[1])
        rep = has_internal_zeros(out.poly)
        if not rep.holds:
            return "conclusion", f"product has internal zeros: {rep.detail}"
        return None

    return _run_pair_suite("no-internal-zeros", config, trial)


def verify_gamma_implies_ulc(config: TrialConfig) -> SuiteResult:
    """A symmetric polynomial whose gamma polynomial is ultra log-concave of
    order floor(s/2) is itself ultra log-concave of order s."""

    def trial(rng, cfg):
        s = rng.randint(0, cfg.max_degree)
        gdeg = rng.randint(0, s // 2)
        gamma = gen_ulc(rng, gdeg, cfg.max_coefficient).poly
        if not is_ulc(gamma, s // 2).holds:
            return "hypothesis", f"gamma polynomial not ULC({s // 2}): {gamma}"
        h = gamma_contract(gamma, s)
        rep = is_ulc(h, s)
        if not rep.holds:
            return "conclusion", f"{h} not ULC({s}): {rep.detail}"
        return None

    return _run_pair_suite("gamma-implies-ulc", config, trial)


def verify_mixed_logconcave(config: TrialConfig) -> SuiteResult:
    """ULC times log-concave-without-internal-zeros stays log-concave
    without internal zeros."""

    def trial(rng, cfg):
        d1 = rng.randint(0, cfg.max_degree)
        t1 = gen_ulc(rng, d1, cfg.max_coefficient)
        if not is_ulc(t1.poly, d1).holds:
            return "hypothesis", f"first factor not ULC({d1})"
        d2 = rng.randint(0, cfg.max_degree)
        t2 = gen_logconcave(rng, d2, cfg.max_coefficient)
        if not (is_log_concave(t2.poly).holds and has_internal_zeros(t2.poly).holds):
            return "hypothesis", "second factor not log-concave with contiguous support"
        out = hadamard(t1, t2)
        if not is_log_concave(out.poly).holds:
            return "conclusion", f"product not log-concave: {out.poly}"
        if not has_internal_zeros(out.poly).holds:
            return "conclusion", f"product has internal zeros: {out.poly}"
        return None

    return _run_pair_suite("mixed-logconcave", config, trial)


def verify_reeve(k_max: int = 8) -> SuiteResult:
    """Confirm the counterexample family: no diamond power of the Reeve
    simplex f-polynomial is log-concave, and no numerator is real-rooted."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    report = counterexample_report(k_max)
    failures = ()
    if not report.holds:
        failures = (TrialFailure(0, "conclusion", report.detail),)
    return SuiteResult(
        suite="reeve",
        params=(("k-max", k_max),),
        trials_run=k_max,
        failures=failures,
        ok=report.holds,
        summary=(
            f"counterexample confirmed for every power up to {k_max}"
            if report.holds
            else "counterexample not confirmed; this indicates a bug in this package"
        ),
    )


def scan_logconcave_pair(config: TrialConfig) -> SuiteResult:
    """Search random log-concave pairs for a product that is not log-concave.

    Whether log-concavity with contiguous support is preserved is open; a
    find here is a research result, not a failure, so the scan always
    succeeds as a process.
    """
    findings: list[str] = []
    for trial in range(config.trials):
        rng = _trial_rng(config, "scan-logconcave-pair", trial)
        d1 = rng.randint(0, config.max_degree)
        d2 = rng.randint(0, config.max_degree)
        t1 = gen_logconcave(rng, d1, config.max_coefficient)
        t2 = gen_logconcave(rng, d2, config.max_coefficient)
        out = hadamard(t1, t2)
        lc = is_log_concave(out.poly)
        gaps = has_internal_zeros(out.poly)
        if not (lc.holds and gaps.holds):
            findings.append(
                f"trial {trial}: ({list(map(str, t1.poly.coeffs))}, {d1}) x "
                f"({list(map(str, t2.poly.coeffs))}, {d2}) -> not preserved "
                f"({lc.detail or gaps.detail})"
            )
    summary = (
        f"{len(findings)} counterexample(s) found; see findings above"
        if findings
        else "no counterexample found; the question stays open"
    )
    return SuiteResult(
        suite="scan-logconcave-pair",
        params=(
            ("seed", config.seed),
            ("trials", config.trials),
            ("max-degree", config.max_degree),
            ("max-coefficient", config.max_coefficient),
        ),
        trials_run=config.trials,
        failures=(),
        ok=True,
        summary=summary,
        findings=tuple(findings),
    )


SUITES = {
    "wagner": verify_wagner,
    "ulc-preservation": verify_ulc_preservation,
    "gamma-preservation": verify_gamma_preservation,
    "symdec-nonneg": verify_symdec_nonneg,
    "symdec-gamma": verify_symdec_gamma,
    "symdec-interlacing": verify_symdec_interlacing,
    "no-internal-zeros": verify_no_internal_zeros,
    "gamma-implies-ulc": verify_gamma_implies_ulc,
    "mixed-logconcave": verify_mixed_logconcave,
}
