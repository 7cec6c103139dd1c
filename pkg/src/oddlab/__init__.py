"""Numerical audit of the odd-number associated sequence a_n = 2^n e^(1-2n),
its Dirichlet series, and the zeta, gamma, Möbius and von Mangoldt relations
claimed for it.
"""

from oddlab.arithmetic import LogBase
from oddlab.claims import run_all, run_claim
from oddlab.dirichlet import DirichletPoint, df_eval
from oddlab.sequences import SeriesEstimate, assoc_term, odd, partial_sum
from oddlab.special import DirectSum, EulerProduct, GammaCompositeVariant, gamma, zeta

__version__ = "0.1.0"

__all__ = [
    "DirectSum",
    "DirichletPoint",
    "EulerProduct",
    "GammaCompositeVariant",
    "LogBase",
    "SeriesEstimate",
    "assoc_term",
    "df_eval",
    "gamma",
    "odd",
    "partial_sum",
    "run_all",
    "run_claim",
    "zeta",
]
