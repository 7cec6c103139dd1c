"""Dirichlet series with rigorous truncation bounds.

Coefficients must come with a decay certificate ``|a_n| <= c q^n``; the tail
bound is built from that certificate only, so a sequence without one cannot be
summed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from oddlab.errors import CertificateError, DomainError
from oddlab.sequences import RATIO, SeriesEstimate, assoc_rounding, assoc_term, series_sum_closed
from oddlab.special import DirectSum, zeta

DEFAULT_TERMS = 64
#: Direct-sum length used for zeta(s) inside the factored form.
FACTORED_ZETA_TERMS = 10**5

# relative slack when checking coefficients against their certificate
_CERT_SLACK = 1e-12


@dataclass(frozen=True)
class DecayCertificate:
    scale: float
    ratio: float

    def __post_init__(self):
        if not 0.0 < self.ratio < 1.0:
            raise DomainError(f"certificate ratio must lie in (0, 1), got {self.ratio}")
        if not self.scale > 0.0:
            raise DomainError(f"certificate scale must be positive, got {self.scale}")

    def bound(self, n: int) -> float:
        return self.scale * self.ratio**n


@dataclass(frozen=True)
class DirichletPoint:
    s: float
    terms: int = DEFAULT_TERMS

    def __post_init__(self):
        if isinstance(self.terms, bool) or not isinstance(self.terms, int) or self.terms < 1:
            raise DomainError(f"terms must be an integer >= 1, got {self.terms!r}")


ASSOC_CERTIFICATE = DecayCertificate(scale=math.e, ratio=RATIO)


def _tail_bound(cert: DecayCertificate, s: float, start: int) -> float:
    """Bound sum_{n>=start} c q^n n^-s.

    The ratio between consecutive bound terms is q ((n+1)/n)^-s.  For s >= 0
    that is at most q.  For s < 0 it decreases towards q, so terms are summed
    one by one until the ratio drops below 1 and a geometric tail closes it.
    """
    n = start
    explicit = []
    while True:
        rho = cert.ratio if s >= 0 else cert.ratio * ((n + 1) / n) ** (-s)
        if rho < 1.0:
            break
        explicit.append(cert.bound(n) * n**-s)
        n += 1
    return math.fsum(explicit) + cert.bound(n) * n**-s / (1.0 - rho)


def dirichlet_eval(
    coefficients: Callable[[int], float],
    certificate: DecayCertificate,
    point: DirichletPoint,
) -> SeriesEstimate:
    """Truncated sum of ``coefficients(n) / n^s`` for n = 1..N, summed in ascending n."""
    s, big_n = point.s, point.terms
    terms = []
    magnitudes = []
    for n in range(1, big_n + 1):
        a = coefficients(n)
        if abs(a) > certificate.bound(n) * (1.0 + _CERT_SLACK):
            raise CertificateError(
                f"|a_{n}| = {abs(a)!r} exceeds certificate bound {certificate.bound(n)!r}"
            )
        terms.append(a * n**-s)
        magnitudes.append(certificate.bound(n) * n**-s)
    total = math.fsum(terms)
    return SeriesEstimate(
        total, big_n, _tail_bound(certificate, s, big_n + 1),
        rounding=_rounding(magnitudes, total),
    )


def _rounding(magnitudes: list[float], total: float) -> float:
    # coefficient error (n + 3) eps as for e q^n, plus pow and product: 2 ulps
    return assoc_rounding(magnitudes, total, extra_ulps=2)


def df_eval(point: DirichletPoint) -> SeriesEstimate:
    """D_f(s) = sum a_n n^-s for the associated sequence a_n = 2^n e^(1-2n)."""
    return dirichlet_eval(lambda n: assoc_term(n).value, ASSOC_CERTIFICATE, point)


def df_paper_factored(s: float, zeta_terms: int = FACTORED_ZETA_TERMS) -> float:
    """The factored right-hand side zeta(s) * sum a_n.

    This is what you get by splitting sum a_n n^-s into a product of two sums.
    It is not equal to D_f(s); it is kept so the two can be compared.
    """
    if not s > 1:
        raise DomainError(f"factored form needs s > 1, got {s}")
    return zeta(s, DirectSum(zeta_terms)).partial_sum * series_sum_closed()


def df2_paper_value() -> float:
    """zeta(2) times the ratio limit 2/e^2 in place of the series sum; equals (pi/e)^2 / 3."""
    return math.pi**2 / 6.0 * RATIO
