"""Integer machinery: sieve, factorization, Möbius and von Mangoldt functions,
prime counting, the multiplicativity probe for a_n, and Goldbach witnesses.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from oddlab.errors import DomainError, ResourceError, SingularityError
from oddlab.sequences import assoc_term

SIEVE_GUARD = 10**8


class LogBase(enum.Enum):
    NATURAL = "natural"
    TEN = "ten"

    def log(self, x: float) -> float:
        return math.log(x) if self is LogBase.NATURAL else math.log10(x)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        product = 1
        for p, k in self.factors.items():
            product *= p**k
        if product != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")


@dataclass(frozen=True)
class GoldbachWitness:
    n: int
    p: int
    q: int


@dataclass(frozen=True)
class GoldbachScan:
    max_even: int
    verified: int
    # evens with no witness; any entry would disprove the conjecture
    failures: tuple[int, ...]
    largest_p: int
    largest_p_at: int


def _check_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")


def _check_guard(limit: int, guard: int | None) -> None:
    guard = SIEVE_GUARD if guard is None else guard
    if limit > guard:
        raise ResourceError(f"limit {limit} exceeds sieve guard {guard}")


@lru_cache(maxsize=32)
def _sieve_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    mask.setflags(write=False)
    return mask


def prime_mask(limit: int, guard: int | None = None) -> np.ndarray:
    """Read-only boolean table, ``mask[k]`` true iff k is prime, for 0 <= k <= limit."""
    if limit < 0:
        raise DomainError(f"limit must be nonnegative, got {limit}")
    _check_guard(limit, guard)
    return _sieve_mask(max(limit, 1))[: limit + 1]


def sieve_primes(limit: int, guard: int | None = None) -> list[int]:
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")
    return np.flatnonzero(prime_mask(limit, guard)).tolist()


_small_primes_lock = threading.Lock()
_small_primes: tuple[int, ...] = ()
_small_primes_limit = 1


def _primes_to(limit: int) -> tuple[int, ...]:
    # grown by doubling; each published tuple is immutable
    global _small_primes, _small_primes_limit
    if limit > _small_primes_limit:
        with _small_primes_lock:
            if limit > _small_primes_limit:
                size = max(1024, 1 << (limit - 1).bit_length())
                _small_primes = tuple(np.flatnonzero(_sieve_mask(size)).tolist())
                _small_primes_limit = size
    return _small_primes


def factorize(n: int) -> Factorization:
    """Trial division by sieved primes up to sqrt(n)."""
    _check_positive(n)
    factors: dict[int, int] = {}
    rest = n
    for p in _primes_to(math.isqrt(n)):
        if p * p > rest:
            break
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors[p] = k
    if rest > 1:
        factors[rest] = 1
    return Factorization(n, factors)


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    divs = [1]
    for p, k in factorize(n).factors.items():
        divs = [d * p**j for d in divs for j in range(k + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    factors = factorize(n).factors
    if any(k > 1 for k in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def von_mangoldt(n: int, base: LogBase = LogBase.NATURAL) -> float:
    factors = factorize(n).factors
    if len(factors) != 1:
        return 0.0
    (p,) = factors
    return base.log(p)


def divisor_lambda_sum(n: int, base: LogBase = LogBase.NATURAL) -> float:
    """Sum of von Mangoldt over the divisors of n; equals log n (Chebyshev)."""
    return math.fsum(von_mangoldt(d, base) for d in divisors(n))


def lambda_by_inversion(n: int, base: LogBase = LogBase.NATURAL) -> float:
    """von Mangoldt recovered by Möbius inversion, sum over d|n of mu(d) log(n/d)."""
    return math.fsum(mobius(d) * base.log(n // d) for d in divisors(n))


def r_factor(n: int) -> float:
    """The factor r with ``a_n = r * log10(n)``, i.e. ``a_n * log_n(10)``."""
    _check_positive(n)
    if n == 1:
        raise SingularityError("log base 1 is undefined; r_factor needs n >= 2")
    return assoc_term(n).value / math.log10(n)


def prime_count(x: float, guard: int | None = None) -> int:
    """pi(x): number of primes <= floor(x)."""
    if x < 0 or math.isnan(x):
        raise DomainError(f"x must be nonnegative, got {x}")
    limit = math.floor(x)
    if limit < 2:
        return 0
    return int(np.count_nonzero(prime_mask(limit, guard)))


def _coprime_pairs(max_n: int):
    for m in range(2, max_n + 1):
        for n in range(m + 1, max_n + 1):
            if math.gcd(m, n) == 1:
                yield m, n
    for n in range(2, max_n + 1):
        yield 1, n


def multiplicativity_search(max_n: int) -> tuple[int, int, float, float] | None:
    """First coprime pair (m, n) with f(mn) != f(m) f(n) for f = a_n.

    Pairs 2 <= m < n <= max_n are scanned lexicographically, then (1, n).
    Returns ``(m, n, f(mn), f(m) * f(n))`` or None when every pair passes.
    """
    if max_n < 2:
        raise DomainError(f"max_n must be >= 2, got {max_n}")
    for m, n in _coprime_pairs(max_n):
        fmn = assoc_term(m * n).value
        prod = assoc_term(m).value * assoc_term(n).value
        if abs(fmn - prod) > 1e-12 * max(1.0, abs(fmn)):
            return m, n, fmn, prod
    return None


def _check_even(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 4 or n % 2:
        raise DomainError(f"expected an even integer >= 4, got {n!r}")


def goldbach_decompose(n: int, guard: int | None = None) -> GoldbachWitness | None:
    """Witness n = p + q with the smallest prime p, or None if there is none."""
    _check_even(n)
    mask = prime_mask(n, guard)
    for p in range(2, n // 2 + 1):
        if mask[p] and mask[n - p]:
            return GoldbachWitness(n, p, n - p)
    return None


def goldbach_scan(max_even: int, guard: int | None = None) -> GoldbachScan:
    """Find the smallest-p witness for every even number in [4, max_even]."""
    _check_even(max_even)
    mask = prime_mask(max_even, guard)
    evens = np.arange(4, max_even + 1, 2, dtype=np.int64)
    witness_p = np.zeros(evens.size, dtype=np.int64)
    open_idx = np.arange(evens.size)
    for p in np.flatnonzero(mask[: max_even // 2 + 1]):
        if open_idx.size == 0:
            break
        cand = evens[open_idx]
        hit = (cand >= 2 * p) & mask[np.maximum(cand - p, 0)]
        witness_p[open_idx[hit]] = p
        open_idx = open_idx[~hit]
    failures = tuple(evens[witness_p == 0].tolist())
    top = int(np.argmax(witness_p))
    return GoldbachScan(
        max_even=max_even,
        verified=int(np.count_nonzero(witness_p)),
        failures=failures,
        largest_p=int(witness_p[top]),
        largest_p_at=int(evens[top]),
    )
