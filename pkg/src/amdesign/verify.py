"""Scenario verifiers: structured pass/fail reports for the design-theoretic
properties of near-extremal self-dual and formally self-dual codes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf2core import (
    NEAR_EXTREMAL,
    BinaryCode,
    EnumerationGuardError,
    classify,
    doubly_even_subcode,
    dual,
    minimum_distance,
    weight_distribution,
)
from .designs import (
    Design,
    code_from_design,
    complement_design,
    design_strength,
    is_self_orthogonal_design,
    is_t_design,
    support_design,
    t_design_violation,
    union,
)
from .harmonic import delsarte_design_check, harm_basis, harmonic_weight_enumerator

__all__ = [
    "PreconditionError",
    "StrengthProfile",
    "VerificationReport",
    "assmus_mattson_check",
    "exact_json",
    "report",
    "strength_profile",
    "verify_cor_1_5",
    "verify_thm_1_1",
    "verify_thm_1_2_fsd",
    "verify_thm_1_2_type1",
    "verify_thm_1_4_pipeline",
]


class PreconditionError(ValueError):
    """A scenario's hypotheses do not hold for the given input."""


def exact_json(value):
    """Recursively convert witness values to JSON-native data, rendering
    integers and rationals as strings so reports diff bit-exactly."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): exact_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact_json(v) for v in value]
    raise TypeError(f"cannot serialize witness of type {type(value).__name__}")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one scenario: verdict plus exact witness values."""

    scenario: str
    passed: bool
    witnesses: dict

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "VerificationReport":
        return cls(obj["scenario"], obj["verdict"] == "pass", obj["witnesses"])


def report(scenario: str, passed: bool, witnesses: dict) -> VerificationReport:
    return VerificationReport(scenario, passed, exact_json(witnesses))


@dataclass(frozen=True)
class StrengthProfile:
    """Design strength of every nonempty support design C_w, 0 < w < n."""

    per_weight: dict

    @property
    def delta(self) -> int:
        return min(self.per_weight.values())

    @property
    def s(self) -> int:
        return max(self.per_weight.values())


def strength_profile(c: BinaryCode, t_cap: int) -> StrengthProfile:
    wd = weight_distribution(c)
    per = {}
    for w in sorted(wd.counts):
        if 0 < w < c.n:
            per[w] = design_strength(support_design(c, w), t_cap)
    if not per:
        raise ValueError("no weights strictly between 0 and n")
    return StrengthProfile(per)


def assmus_mattson_check(c: BinaryCode, t: int) -> VerificationReport:
    """Hypothesis test for the classical weight-count criterion: at most
    d_dual - t nonzero weights of C are <= n - t. A pass lists the weights
    whose support designs the criterion promises to be t-designs."""
    d = minimum_distance(c)
    if t >= d:
        raise PreconditionError("t must be less than the minimum distance")
    dual_code = dual(c)
    d_dual = minimum_distance(dual_code)
    wd = weight_distribution(c)
    small = [w for w in sorted(wd.counts) if 0 < w <= c.n - t]
    applicable = len(small) <= d_dual - t
    witnesses = {
        "t": t,
        "length": c.n,
        "dimension": c.dimension,
        "minimum_distance": d,
        "dual_minimum_distance": d_dual,
        "nonzero_weights_at_most_n_minus_t": small,
        "weight_count": len(small),
        "bound": d_dual - t,
        "applicable": applicable,
    }
    if applicable:
        dual_wd = weight_distribution(dual_code)
        witnesses["promised_code_weights"] = [
            u for u in sorted(wd.counts) if d <= u <= c.n - t
        ]
        witnesses["promised_dual_weights"] = [
            w for w in sorted(dual_wd.counts) if d_dual <= w <= c.n
        ]
    return report("am", applicable, witnesses)


def verify_thm_1_1(c: BinaryCode) -> VerificationReport:
    """All support designs (self-dual input) or all unions C_w + dual_w
    (formally self-dual input) are 1-designs, cross-checked by the vanishing
    of the degree-1 harmonic weight enumerators."""
    if c.n % 8 != 0:
        raise PreconditionError("length must be divisible by 8")
    cls = classify(c)
    if cls.extremality != NEAR_EXTREMAL:
        raise PreconditionError("code is not near-extremal")
    if not (cls.type_one or (cls.even and cls.formally_self_dual)):
        raise PreconditionError("code is neither Type I nor even formally self-dual")
    dual_code = dual(c)
    wd = weight_distribution(c)
    weights = [w for w in sorted(wd.counts) if 0 < w < c.n]

    lambdas = {}
    failures = []
    for w in weights:
        if cls.self_dual:
            d = support_design(c, w)
        else:
            d = union(support_design(c, w), support_design(dual_code, w))
        lam = is_t_design(d, 1)
        lambdas[w] = lam
        if lam is None:
            failures.append(w)
    counting_ok = not failures

    nonzero = []
    for idx, f in enumerate(harm_basis(c.n, 1)):
        w_sum = harmonic_weight_enumerator(c, f)
        if not cls.self_dual:
            w_sum = w_sum + harmonic_weight_enumerator(dual_code, f)
        if not w_sum.is_zero:
            nonzero.append(idx)
    harmonic_ok = not nonzero

    witnesses = {
        "branch": "self_dual" if cls.self_dual else "formally_self_dual",
        "lambda_1_per_weight": lambdas,
        "counting_route": counting_ok,
        "harmonic_route": harmonic_ok,
    }
    if failures:
        w = failures[0]
        d = (
            support_design(c, w)
            if cls.self_dual
            else union(support_design(c, w), support_design(dual_code, w))
        )
        witnesses["violation_weight"] = w
        witnesses["violation"] = t_design_violation(d, 1)
    if nonzero:
        witnesses["nonzero_enumerator_indices"] = nonzero
    return report("thm1.1", counting_ok and harmonic_ok, witnesses)


def _require_type1_16(c: BinaryCode):
    if c.n != 16:
        raise PreconditionError("length must be 16")
    cls = classify(c)
    if not cls.type_one:
        raise PreconditionError("code is not Type I")
    if cls.extremality != NEAR_EXTREMAL:
        raise PreconditionError("code is not near-extremal")
    return cls


def verify_thm_1_2_type1(
    c: BinaryCode, c6: Design | None = None
) -> VerificationReport:
    """C_6 is a 2-(16,6,8) design (counting and harmonic routes), C_10 is its
    complement, and the strength gap delta=1 < s=2 sits exactly at w in
    {6, 10}. A substitute block multiset may be supplied for mutation tests."""
    _require_type1_16(c)
    if c6 is None:
        c6 = support_design(c, 6)
    lam = is_t_design(c6, 2)
    counting_ok = lam == 8
    delsarte_ok = delsarte_design_check(c6.blocks, c.n, 2)
    complement_ok = complement_design(c6) == support_design(c, 10)
    prof = strength_profile(c, 3)
    gap_weights = sorted(w for w, t in prof.per_weight.items() if t >= 2)
    profile_ok = prof.delta == 1 and prof.s == 2 and gap_weights == [6, 10]
    passed = counting_ok and delsarte_ok and complement_ok and profile_ok
    witnesses = {
        "lambda_2": lam,
        "block_count": c6.b,
        "counting_route": counting_ok,
        "harmonic_route": delsarte_ok,
        "complement_matches": complement_ok,
        "strengths": prof.per_weight,
        "delta": prof.delta,
        "s": prof.s,
        "strength_2_weights": gap_weights,
    }
    if not counting_ok:
        witnesses["violation"] = t_design_violation(c6, 2)
    return report("thm1.2-1", passed, witnesses)


def verify_thm_1_2_fsd(c: BinaryCode) -> VerificationReport:
    """Unions C_w + dual_w at w in {6, 10} are 2-designs for near-extremal
    even formally self-dual codes of length 16."""
    if c.n == 64:
        raise EnumerationGuardError(
            "weight-slice enumeration required for length-64 unions"
        )
    if c.n != 16:
        raise PreconditionError("length must be 16")
    cls = classify(c)
    if not (cls.even and cls.formally_self_dual):
        raise PreconditionError("code is not even formally self-dual")
    if cls.extremality != NEAR_EXTREMAL:
        raise PreconditionError("code is not near-extremal")
    wd = weight_distribution(c)
    if not (wd.count(6) and wd.count(10)):
        raise PreconditionError(
            "no weight-6 or weight-10 words: the union designs are empty"
        )
    dual_code = dual(c)
    lambdas = {}
    witnesses = {"self_dual": cls.self_dual}
    passed = True
    for w in (6, 10):
        u = union(support_design(c, w), support_design(dual_code, w))
        lam = is_t_design(u, 2)
        lambdas[w] = lam
        if lam is None:
            passed = False
            witnesses["violation_weight"] = w
            witnesses["violation"] = t_design_violation(u, 2)
    witnesses["lambda_2_per_weight"] = lambdas
    return report("thm1.2-2", passed, witnesses)


_PIPELINE_STEPS = (
    "even_self_orthogonal",
    "dual_minimum_distance",
    "count_bound",
    "self_dual",
    "classification",
    "support_design_match",
)


def verify_thm_1_4_pipeline(d: Design) -> VerificationReport:
    """Uniqueness pipeline: a self-orthogonal 2-(16,6,8) design generates the
    near-extremal Type I [16,8,4] code and is recovered as its C_6."""
    if d.v != 16:
        raise PreconditionError("points: expected v = 16")
    if d.k != 6:
        raise PreconditionError("block size: expected k = 6")
    if is_t_design(d, 2) != 8:
        raise PreconditionError("2-design: expected lambda = 8")
    if not is_self_orthogonal_design(d):
        raise PreconditionError("self-orthogonality: odd block intersection found")

    c = code_from_design(d)
    wd = weight_distribution(c)
    word_count = sum(wd.count(w) for w in (0, 6, 10, 16))
    cls = classify(c)
    steps = {
        "even_self_orthogonal": cls.even and cls.self_orthogonal,
        "dual_minimum_distance": minimum_distance(dual(c)) == 4,
        "count_bound": word_count > 2**7,
        "self_dual": c.dimension == 8 and cls.self_dual,
        "classification": (
            cls.type_one
            and cls.extremality == NEAR_EXTREMAL
            and minimum_distance(c) == 4
        ),
        "support_design_match": support_design(c, 6) == d,
    }
    passed = all(steps.values())
    witnesses = {
        "steps": steps,
        "dimension": c.dimension,
        "weight_distribution": wd.counts,
        "counted_words_0_6_10_16": word_count,
    }
    if not passed:
        witnesses["failing_step"] = next(
            name for name in _PIPELINE_STEPS if not steps[name]
        )
    return report("thm1.4", passed, witnesses)


def verify_cor_1_5(c: BinaryCode) -> VerificationReport:
    """The doubly-even subcode C0 of the Type I [16,8,4] code has a [16,9,4]
    dual whose weight-6 and weight-10 support designs are 2-designs, beating
    the t=1 guarantee of the classical criterion."""
    _require_type1_16(c)
    c0 = doubly_even_subcode(c)
    c0_dual = dual(c0)
    wd0 = weight_distribution(c0)
    prof0 = strength_profile(c0, 3)
    prof1 = strength_profile(c0_dual, 3)
    checks = {
        "subcode_dimension": c0.dimension == 7,
        "subcode_doubly_even": all(w % 4 == 0 for w in wd0.counts),
        "dual_dimension": c0_dual.dimension == 9,
        "dual_minimum_distance": minimum_distance(c0_dual) == 4,
        "dual_strength_exceeds_guarantee": all(
            prof1.per_weight.get(w, 0) >= 2 for w in (6, 10)
        ),
    }
    passed = all(checks.values())
    witnesses = {
        "checks": checks,
        "subcode_weight_distribution": wd0.counts,
        "subcode_strengths": prof0.per_weight,
        "dual_strengths": prof1.per_weight,
    }
    return report("cor1.5", passed, witnesses)
