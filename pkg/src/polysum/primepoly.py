"""Prime sieving and exception scans for n = p + a*x^2 and n = p + a*p_m(x).

The scan marks p + value into a bitmap over [0, B] (outer loop over the
sparse term values, inner over the prime bitmap), which keeps the
10^7-scale runs to a couple of seconds.  All outputs are complete up to the
scanned bound and nothing more: finiteness of the exception sets is a
conjecture, not an artifact claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .polycore import poly_value

_SEGMENT = 1 << 20
MAX_SIEVE_BOUND = 12_000_000


@dataclass(frozen=True)
class PrimeSieve:
    """Primality bitmap over [0, bound]."""

    bound: int
    bits: np.ndarray

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.bound and bool(self.bits[n])

    def count(self) -> int:
        return int(self.bits.sum())

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.bits)


@dataclass(frozen=True)
class PrimePolyQuery:
    """One decomposition question n = p + coefficient * shape(x).

    shape: "square" (x in Z) or "polygonal" of the given order (x in N).
    universe: "all", "odd", or "coprime" (gcd(coefficient, n) = 1).
    prime_filter: optional (modulus, residue) restriction on p.
    """

    coefficient: int
    shape: str = "square"
    order: int | None = None
    universe: str = "all"
    prime_filter: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.coefficient < 1:
            raise ValueError("coefficient must be >= 1")
        if self.shape not in ("square", "polygonal"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.shape == "polygonal" and (self.order is None or self.order < 3):
            raise ValueError("polygonal shape needs an order >= 3")
        if self.universe not in ("all", "odd", "coprime"):
            raise ValueError(f"unknown universe {self.universe!r}")
        if self.prime_filter is not None:
            q, r = self.prime_filter
            if q < 1 or not 0 <= r < q:
                raise ValueError("prime filter needs modulus >= 1, 0 <= r < q")

    def term_values(self, bound: int) -> list[int]:
        """Sorted term values <= bound (x over N; squares are sign-symmetric)."""
        vals = []
        x = 0
        while True:
            v = (self.coefficient * x * x if self.shape == "square"
                 else self.coefficient * poly_value(self.order, x))
            if v > bound:
                break
            vals.append(v)
            x += 1
        return vals


@lru_cache(maxsize=4)
def sieve_primes(bound: int) -> PrimeSieve:
    """Segmented sieve of Eratosthenes; memory stays at one segment plus the
    output bitmap."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if bound > MAX_SIEVE_BOUND:
        raise ValueError(f"bound {bound} above supported {MAX_SIEVE_BOUND}")
    bits = np.zeros(bound + 1, dtype=bool)
    root = int(bound ** 0.5) + 1
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for p in range(2, int(root ** 0.5) + 1):
        if base[p]:
            base[p * p :: p] = False
    base_primes = np.flatnonzero(base)
    bits[: root + 1] = base
    lo = root + 1
    while lo <= bound:
        hi = min(lo + _SEGMENT, bound + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base_primes.tolist():
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                seg[start - lo :: p] = False
        bits[lo:hi] = seg
        lo = hi
    return PrimeSieve(bound, bits)


def _prime_bits(query: PrimePolyQuery, bound: int) -> np.ndarray:
    bits = sieve_primes(bound).bits
    if query.prime_filter is None:
        return bits
    q, r = query.prime_filter
    idx = np.arange(bound + 1, dtype=np.int64)
    return bits & (idx % q == r)


def _universe_mask(query: PrimePolyQuery, bound: int) -> np.ndarray:
    idx = np.arange(bound + 1, dtype=np.int64)
    mask = idx > 1
    if query.universe == "odd":
        mask &= idx % 2 == 1
    elif query.universe == "coprime":
        mask &= np.gcd(idx, query.coefficient) == 1
    return mask


def exception_scan(query: PrimePolyQuery, bound: int) -> list[int]:
    """All n in the universe, 2 <= n <= bound, with no decomposition
    n = p + term(x) where p passes the prime filter."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    primes = _prime_bits(query, bound)
    reach = np.zeros(bound + 1, dtype=bool)
    for v in query.term_values(bound - 2):
        reach[v:] |= primes[: bound + 1 - v]
    return np.flatnonzero(_universe_mask(query, bound) & ~reach).tolist()


def max_exception(query: PrimePolyQuery, bound: int) -> int | None:
    """Maximum of exception_scan, or None when the scan is empty."""
    found = exception_scan(query, bound)
    return found[-1] if found else None


def decomposition_witness(query: PrimePolyQuery, n: int,
                          bound: int | None = None) -> tuple[int, int] | None:
    """A concrete (p, x) with n = p + term(x), or None (exhaustive per n)."""
    bound = bound if bound is not None else n
    sieve = sieve_primes(max(bound, 2))
    x = 0
    while True:
        v = (query.coefficient * x * x if query.shape == "square"
             else query.coefficient * poly_value(query.order, x))
        if v > n - 2:
            return None
        p = n - v
        if p in sieve:
            if query.prime_filter is None:
                return p, x
            q, r = query.prime_filter
            if p % q == r:
                return p, x
        x += 1
