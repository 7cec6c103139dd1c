"""The odd numbers P_n, the associated sequence a_n = 2^n e^(1-2n), and its series.

a_n is tied to the odd numbers by ``a_n * exp(P_n) = 2^n``.  Consecutive terms
differ by the constant factor 2/e^2, so the series is geometric and every
truncation has an exact remainder.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass

from oddlab.errors import DomainError

#: Ratio a_{n+1}/a_n, equal to 2/e^2.
RATIO = 2.0 * math.exp(-2.0)

#: Default margin around 1 for the ratio-test verdict.
RATIO_TEST_MARGIN = 1e-9


def _require_index(n: int, lowest: int = 1, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < lowest:
        raise DomainError(f"{name} must be >= {lowest}, got {n}")


@dataclass(frozen=True)
class OddTerm:
    n: int
    value: int


@dataclass(frozen=True)
class AssociatedTerm:
    n: int
    value: float


@dataclass(frozen=True)
class SeriesEstimate:
    """A truncated sum together with a bound on what truncation left out.

    For positive-term series the omitted remainder is nonnegative and the true
    value lies in ``[partial_sum, partial_sum + tail_bound]``.  Estimates that
    already include a correction term (the zeta direct sum) can err in either
    direction; those set ``two_sided`` and the interval widens both ways.

    ``rounding`` bounds the floating-point error in ``partial_sum`` itself and
    widens the interval on both sides.  Once the tail drops below one ulp it is
    the only thing keeping the interval honest.
    """

    partial_sum: float
    terms_used: int
    tail_bound: float
    two_sided: bool = False
    rounding: float = 0.0

    @property
    def value_interval(self) -> tuple[float, float]:
        lo = self.partial_sum - self.rounding
        if self.two_sided:
            lo -= self.tail_bound
        return (lo, self.partial_sum + self.tail_bound + self.rounding)

    def contains(self, x: float) -> bool:
        lo, hi = self.value_interval
        return lo <= x <= hi


class Verdict(enum.Enum):
    CONVERGENT = "Convergent"
    DIVERGENT = "Divergent"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class RatioTestReport:
    limit_estimate: float
    terms_used: int
    verdict: Verdict


def odd(n: int) -> OddTerm:
    """Return the n-th odd number, P_1 = 1, P_2 = 3, ..."""
    _require_index(n)
    return OddTerm(n, 2 * n - 1)


def _assoc_value(n: int) -> float:
    # e * (2/e^2)^n; forming 2^n and e^(1-2n) separately overflows/underflows
    return math.e * RATIO**n


def assoc_term(n: int) -> AssociatedTerm:
    _require_index(n)
    return AssociatedTerm(n, _assoc_value(n))


def recover_odd(n: int) -> float:
    """Recover P_n from a_n through ``n ln 2 - ln(a_n)``."""
    _require_index(n)
    return n * math.log(2.0) - math.log(_assoc_value(n))


def ratio_test(terms: int, margin: float = RATIO_TEST_MARGIN) -> RatioTestReport:
    """D'Alembert test on the associated series using the last two of ``terms`` terms.

    The criterion is the usual one: the series converges when the ratio limit
    is below 1.
    """
    _require_index(terms, lowest=2, name="terms")
    limit = _assoc_value(terms) / _assoc_value(terms - 1)
    if limit < 1.0 - margin:
        verdict = Verdict.CONVERGENT
    elif limit > 1.0 + margin:
        verdict = Verdict.DIVERGENT
    else:
        verdict = Verdict.INCONCLUSIVE
    return RatioTestReport(limit, terms, verdict)


def partial_sum(terms: int) -> SeriesEstimate:
    """Sum a_1..a_N with the exact geometric remainder as tail bound."""
    _require_index(terms, name="terms")
    values = [_assoc_value(n) for n in range(1, terms + 1)]
    total = math.fsum(values)
    tail = _assoc_value(terms + 1) / (1.0 - RATIO)
    return SeriesEstimate(total, terms, tail, rounding=assoc_rounding(values, total))


def assoc_rounding(values: list[float], total: float, extra_ulps: int = 0) -> float:
    """Error bound for fsum of computed a_n (times factors costing ``extra_ulps`` each).

    e * q**n carries relative error below (n + 3) eps: q is within 1 ulp and
    pow scales that by n.  fsum adds one final rounding.
    """
    eps = sys.float_info.epsilon
    per_term = math.fsum(abs(v) * (n + 3 + extra_ulps) for n, v in enumerate(values, start=1))
    return per_term * eps + math.ulp(total)


def series_sum_closed() -> float:
    """Closed form of sum_{n>=1} a_n: (2/e) / (1 - 2/e^2) = 2e/(e^2 - 2)."""
    return 2.0 * math.e / (math.e**2 - 2.0)
