"""Independent reference computations used only by the tests.

Nothing here imports oddlab; each oracle takes a different route
(brute force, mpmath at high precision, closed forms).
"""

import math

import mpmath

mpmath.mp.dps = 40


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_upto(limit):
    return [k for k in range(2, limit + 1) if is_prime(k)]


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_mobius(n):
    if any(n % (k * k) == 0 for k in range(2, math.isqrt(n) + 1)):
        return 0
    distinct = sum(1 for p in range(2, n + 1) if n % p == 0 and is_prime(p))
    return (-1) ** distinct


def brute_von_mangoldt(n):
    for p in range(2, n + 1):
        if is_prime(p):
            k = p
            while k < n:
                k *= p
            if k == n:
                return math.log(p)
    return 0.0


def assoc_exact(n):
    return mpmath.mpf(2) ** n * mpmath.e ** (1 - 2 * n)


def series_sum_exact():
    return 2 * mpmath.e / (mpmath.e**2 - 2)


def df_exact(s, terms=400):
    return mpmath.fsum(assoc_exact(n) / mpmath.mpf(n) ** s for n in range(1, terms + 1))


Q = 2 / mpmath.e**2
DF2 = float(mpmath.e * mpmath.polylog(2, Q))
DF1 = float(-mpmath.e * mpmath.log(1 - Q))
SERIES_SUM = float(series_sum_exact())
PAPER_X2 = float((mpmath.pi / mpmath.e) ** 2 / 3)
X2_PRINTED = float((mpmath.pi / mpmath.e) ** 2 / 2)
DF_FACTORED_2 = float(mpmath.zeta(2) * series_sum_exact())
