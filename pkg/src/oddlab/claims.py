"""Claim ledger: each numbered identity of the audited note, evaluated on both
sides and judged against a relative tolerance.

A claim that fails is a result, not an error.  Only an evaluation that cannot be
carried out (a pole, a bad override) raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from oddlab import arithmetic, dirichlet, sequences, special
from oddlab.arithmetic import LogBase
from oddlab.dirichlet import DirichletPoint
from oddlab.special import GammaCompositeVariant

DEFAULT_TOLERANCE = 1e-9
REPORT_VERSION = 1

# override name -> accepted types
_OVERRIDE_TYPES: dict[str, tuple[type, ...]] = {
    "tolerance": (float, int),
    "s": (float, int),
    "terms": (int,),
    "n_max": (int,),
    "max_n": (int,),
}


class UnknownClaimError(KeyError):
    pass


class InvalidOverrideError(ValueError):
    pass


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    paper_location: str
    variant: str | None
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    holds: bool
    notes: str

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "paper_location": self.paper_location,
            "variant": self.variant,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "notes": self.notes,
        }


def relative_residual(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _verdict(claim: "Claim", variant, lhs, rhs, tolerance, notes) -> ClaimVerdict:
    rel = relative_residual(lhs, rhs)
    return ClaimVerdict(
        claim_id=claim.id,
        paper_location=claim.paper_location,
        variant=variant,
        lhs=float(lhs),
        rhs=float(rhs),
        abs_residual=abs(lhs - rhs),
        rel_residual=rel,
        tolerance=tolerance,
        holds=rel <= tolerance,
        notes=notes,
    )


def _worst(pairs):
    """Pick the (index, lhs, rhs) with the largest relative residual."""
    return max(pairs, key=lambda t: relative_residual(t[1], t[2]))


@dataclass(frozen=True)
class Claim:
    id: str
    paper_location: str
    description: str
    parameters: dict[str, Any]
    # evaluator(claim, params, variant) -> (lhs, rhs, notes)
    evaluate: Callable[["Claim", dict[str, Any], Any], tuple[float, float, str]]
    variants: tuple = (None,)

    def variant_label(self, variant) -> str | None:
        if variant is None:
            return None
        label = variant.value
        return label[0].upper() + label[1:]

    def run(self, overrides: dict[str, Any] | None = None) -> list[ClaimVerdict]:
        params = dict(self.parameters)
        params.setdefault("tolerance", DEFAULT_TOLERANCE)
        for key, value in (overrides or {}).items():
            if key in params:
                params[key] = value
        out = []
        for variant in self.variants:
            lhs, rhs, notes = self.evaluate(self, params, variant)
            out.append(
                _verdict(self, self.variant_label(variant), lhs, rhs, float(params["tolerance"]), notes)
            )
        return out


def _c1(claim, params, _):
    n_max = params["n_max"]
    rows = []
    for n in range(1, n_max + 1):
        lhs = sequences.assoc_term(n).value * math.exp(sequences.odd(n).value)
        rows.append((n, lhs, float(2**n)))
    n, lhs, rhs = _worst(rows)
    return lhs, rhs, f"a_n*exp(P_n) vs 2^n over n in [1, {n_max}]; worst n = {n}"


def _c2(claim, params, _):
    n_max = params["n_max"]
    rows = [(n, sequences.recover_odd(n), float(sequences.odd(n).value)) for n in range(1, n_max + 1)]
    n, lhs, rhs = _worst(rows)
    return lhs, rhs, f"n ln2 - ln(a_n) vs 2n-1 over n in [1, {n_max}]; worst n = {n}"


def _c3(claim, params, _):
    report = sequences.ratio_test(params["terms"])
    notes = (
        f"ratio test verdict {report.verdict.value} under the criterion L < 1; "
        "the printed condition L < 0 cannot hold for a positive ratio"
    )
    return report.limit_estimate, 2.0 / math.e**2, notes


def _c4(claim, params, _):
    max_n = params["max_n"]
    found = arithmetic.multiplicativity_search(max_n)
    if found is None:
        return 0.0, 0.0, f"no coprime pair up to {max_n} breaks f(mn) = f(m)f(n)"
    m, n, fmn, prod = found
    return fmn, prod, (
        f"counterexample (m, n) = ({m}, {n}): f({m * n}) vs f({m})f({n}); "
        f"f(1) = 2/e != 1 so f cannot be multiplicative"
    )


def _c5(claim, params, _):
    s = float(params["s"])
    lhs = dirichlet.df_eval(DirichletPoint(s, params["terms"])).partial_sum
    rhs = dirichlet.df_paper_factored(s)
    return lhs, rhs, (
        f"direct D_f({s:g}) vs zeta({s:g}) * sum a_n; a termwise product of sequences "
        "does not split into a product of sums"
    )


def _c6(claim, params, _):
    lhs = dirichlet.df_eval(DirichletPoint(2.0, params["terms"])).partial_sum
    rhs = dirichlet.df2_paper_value()
    return lhs, rhs, (
        "direct D_f(2) vs (pi^2/6)(2/e^2) = (1/3)(pi/e)^2; the ratio limit 2/e^2 was "
        f"substituted for the series sum 2e/(e^2-2) = {sequences.series_sum_closed():.12g}"
    )


def _paper_x2() -> float:
    return (math.pi / math.e) ** 2 / 3.0


def _c7(claim, params, variant):
    lhs = special.x_composite(2.0, variant)
    denom = "Gamma(s)+1" if variant is GammaCompositeVariant.AS_PRINTED else "Gamma(s+1)+1"
    return lhs, _paper_x2(), f"X(2) with denominator {denom} vs (1/3)(pi/e)^2"


def _c8(claim, params, variant):
    s = float(params["s"])
    lhs = dirichlet.df_eval(DirichletPoint(s, params["terms"])).partial_sum
    rhs = special.x_composite(s, variant)
    denom = "Gamma(s)+1" if variant is GammaCompositeVariant.AS_PRINTED else "Gamma(s+1)+1"
    return lhs, rhs, f"direct D_f({s:g}) vs X({s:g}) with denominator {denom}"


def _c9(claim, params, base):
    n_max = params["n_max"]
    rows = []
    for n in range(2, n_max + 1):
        a_n = sequences.assoc_term(n).value
        # log_n(10^{a_n}) = a_n / log10(n)
        rhs = a_n / math.log10(n) * arithmetic.divisor_lambda_sum(n, base)
        rows.append((n, a_n, rhs))
    n, lhs, rhs = _worst(rows)
    return lhs, rhs, (
        f"a_n vs log_n(10^a_n) * sum_(d|n) Lambda(d) with {base.value} logs over "
        f"n in [2, {n_max}]; worst n = {n}; exponent 2^n e^(1-2^n) read as a_n"
    )


def _c10(claim, params, _):
    n_max = params["n_max"]
    rows = [
        (n, arithmetic.lambda_by_inversion(n), arithmetic.von_mangoldt(n))
        for n in range(1, n_max + 1)
    ]
    n, lhs, rhs = _worst(rows)
    return lhs, rhs, (
        f"sum_(d|n) mu(d) ln(n/d) vs Lambda(n) over n in [1, {n_max}]; worst n = {n}; "
        "printed double sum read as the single inversion sum"
    )


_GAMMA_VARIANTS = (GammaCompositeVariant.AS_PRINTED, GammaCompositeVariant.SHIFTED_DENOMINATOR)

_TERMS = dirichlet.DEFAULT_TERMS

REGISTRY: tuple[Claim, ...] = (
    Claim("C1", "Eq. (1.1)", "a_n e^{P_n} = 2^n for the odd numbers P_n.", {"n_max": 200}, _c1),
    Claim("C2", "Eq. (1.2)", "P_n = n ln 2 - ln(a_n) recovers the odd numbers.", {"n_max": 200}, _c2),
    Claim("C3", "Sec. 1, ratio-test proof", "The ratio a_{n+1}/a_n tends to 2/e^2 and the series converges.",
          {"terms": 100}, _c3),
    Claim("C4", "Def. 1.1 / Sec. 2", "f(n) = a_n is multiplicative.", {"max_n": 30}, _c4),
    Claim("C5", "Eqs. (2.5)-(2.6)", "D_f(s) = zeta(s) * sum a_n.", {"s": 2.0, "terms": _TERMS}, _c5),
    Claim("C6", "Eqs. (2.10)-(2.11)", "D_f(2) = (1/3)(pi/e)^2.", {"terms": _TERMS}, _c6),
    Claim("C7", "Eq. (2.13)", "X(2) = (1/3)(pi/e)^2.", {}, _c7, _GAMMA_VARIANTS),
    Claim("C8", "Eq. (2.14)", "D_f(2) = X(2).", {"s": 2.0, "terms": _TERMS}, _c8, _GAMMA_VARIANTS),
    Claim("C9", "Eq. (2.17)", "a_n = log_n(10^{a_n}) * sum_{d|n} Lambda(d).", {"n_max": 100}, _c9,
          (LogBase.TEN, LogBase.NATURAL)),
    Claim("C10", "Eq. (2.18)", "Mobius inversion of sum_{d|n} Lambda(d) recovers Lambda(n).",
          {"n_max": 10**4}, _c10),
)

_BY_ID = {claim.id: claim for claim in REGISTRY}


def claim_ids() -> list[str]:
    return [claim.id for claim in REGISTRY]


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


def validate_overrides(overrides: dict[str, Any] | None) -> dict[str, Any]:
    checked = {}
    for key, value in (overrides or {}).items():
        if key not in _OVERRIDE_TYPES:
            raise InvalidOverrideError(f"unknown override {key!r}")
        if isinstance(value, bool) or not isinstance(value, _OVERRIDE_TYPES[key]):
            raise InvalidOverrideError(f"override {key!r} has wrong type: {value!r}")
        if key != "s" and not value > 0:
            raise InvalidOverrideError(f"override {key!r} must be positive, got {value!r}")
        checked[key] = value
    return checked


def run_claim(claim_id: str, overrides: dict[str, Any] | None = None) -> list[ClaimVerdict]:
    """Evaluate one claim; returns one verdict per variant (a single one if none)."""
    claim = get_claim(claim_id)
    return claim.run(validate_overrides(overrides))


def run_all(overrides: dict[str, Any] | None = None, ids: list[str] | None = None) -> list[ClaimVerdict]:
    checked = validate_overrides(overrides)
    selected = claim_ids() if ids is None else [get_claim(i).id for i in ids]
    verdicts = []
    for claim in REGISTRY:
        if claim.id in selected:
            verdicts.extend(claim.run(checked))
    return verdicts


@dataclass
class Report:
    verdicts: list[ClaimVerdict]
    tolerance_default: float = DEFAULT_TOLERANCE
    version: int = field(default=REPORT_VERSION)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "tolerance_default": self.tolerance_default,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }
