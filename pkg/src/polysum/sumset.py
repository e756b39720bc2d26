"""Range sieves and membership tests for sums of weighted polygonal terms.

Bitmaps are plain Python ints (bit n = membership of n), so the sieve is a
sequence of shift-and-or passes: exact, allocation-free, and fast enough
for bounds up to a few million.  Every exception list is re-verified at
construction through an independent set-based enumeration; downstream
elimination certificates rely on that.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polycore import (
    SumDomain,
    Term,
    TripleSum,
    Witness,
    poly_values_upto,
    poly_values_with_args,
    term_argument,
)

WORKERS_ENV = "POLYSUM_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    if raw.strip():
        return max(1, int(raw))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class RangeBitset:
    """Membership bitmap of a sumset restricted to [0, bound]."""

    bound: int
    bits: int

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.bound and bool((self.bits >> n) & 1)

    def count(self) -> int:
        return self.bits.bit_count()

    def missing(self) -> list[int]:
        """Sorted positions in [0, bound] with the bit unset."""
        mask = (1 << (self.bound + 1)) - 1
        gaps = ~self.bits & mask
        out = []
        while gaps:
            low = gaps & -gaps
            out.append(low.bit_length() - 1)
            gaps ^= low
        return out

    def first_missing(self, count: int = 1) -> list[int]:
        mask = (1 << (self.bound + 1)) - 1
        gaps = ~self.bits & mask
        out = []
        while gaps and len(out) < count:
            low = gaps & -gaps
            out.append(low.bit_length() - 1)
            gaps ^= low
        return out


@dataclass(frozen=True)
class ExceptionReport:
    """Non-representable n <= bound for a polygonal sum, re-verified."""

    sum: TripleSum
    bound: int
    exceptions: tuple[int, ...]
    offsets: tuple[int, ...] = field(default=(0,))


def _shift_or(base: int, shifts: Sequence[int], mask: int, workers: int) -> int:
    """OR of (base << v) over shifts, truncated by mask.

    Chunking the shift list and or-merging chunk results is associative and
    commutative, so the outcome never depends on the chunk layout.
    """
    if workers > 1 and len(shifts) >= 64:
        chunks = [shifts[i::workers] for i in range(workers)]

        def one(chunk: Sequence[int]) -> int:
            acc = 0
            for v in chunk:
                acc |= base << v
            return acc & mask

        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(one, chunks))
        out = 0
        for part in parts:
            out |= part
        return out
    out = 0
    for v in shifts:
        out |= base << v
    return out & mask


def range_sieve(terms: Sequence[Term], domain: SumDomain, bound: int,
                workers: int | None = None) -> RangeBitset:
    """Exact membership bitmap of {sum of one value per term} on [0, bound]."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if not 1 <= len(terms) <= 4:
        raise ValueError("range_sieve takes 1..4 terms")
    workers = workers if workers else default_workers()
    mask = (1 << (bound + 1)) - 1
    streams = sorted((poly_values_upto(t, domain, bound) for t in terms),
                     key=len, reverse=True)
    bits = 0
    for v in streams[0]:
        bits |= 1 << v
    for stream in streams[1:]:
        bits = _shift_or(bits, stream, mask, workers)
    return RangeBitset(bound, bits)


def _pair_value_set(terms: Sequence[Term], domain: SumDomain, bound: int) -> set[int]:
    sums = {0}
    for t in terms:
        vs = poly_values_upto(t, domain, bound)
        sums = {s + v for s in sums for v in vs if s + v <= bound}
    return sums


def _verify_non_representable(terms: Sequence[Term], domain: SumDomain,
                              ns: Iterable[int],
                              offsets: Sequence[int] = (0,)) -> None:
    """Exhaustively re-check that no n in ns is (value sum + offset).

    Independent of the bitmap path: the first len-1 terms are expanded into
    an explicit pair set, the last term is walked value by value.
    """
    ns = list(ns)
    if not ns:
        return
    top = max(ns)
    head, last = terms[:-1], terms[-1]
    pair = _pair_value_set(head, domain, top)
    last_vals = poly_values_upto(last, domain, top)
    for n in ns:
        for r in offsets:
            m = n - r
            if m < 0:
                continue
            for v in last_vals:
                if v > m:
                    break
                if (m - v) in pair:
                    raise AssertionError(
                        f"exception re-verification failed: {n} is representable")


def exceptions(sum_: TripleSum, bound: int,
               workers: int | None = None) -> ExceptionReport:
    """Exact list of non-representable n <= bound, mandatory re-verified."""
    bitset = range_sieve(sum_.terms, sum_.domain, bound, workers)
    missing = tuple(bitset.missing())
    _verify_non_representable(sum_.terms, sum_.domain, missing)
    return ExceptionReport(sum_, bound, missing)


def member_with_witness(sum_: TripleSum, n: int) -> Witness | None:
    """A witness tuple for n, or None (exhaustive search, so None is proof).

    The sparsest value stream is enumerated outermost; the innermost term is
    resolved by the square-completion membership test.  The first witness in
    that enumeration order is returned.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    terms = sum_.terms
    domain = sum_.domain
    if len(terms) == 1:
        x = term_argument(terms[0], n, domain)
        return Witness((x,)) if x is not None else None
    order = sorted(range(len(terms)),
                   key=lambda i: len(poly_values_upto(terms[i], domain, n)))
    # innermost slot: densest stream, resolved arithmetically
    inner = order[-1]
    outer_slots = order[:-1]

    def rec(slot_idx: int, remaining: int, args: dict[int, int]) -> Witness | None:
        if slot_idx == len(outer_slots):
            x = term_argument(terms[inner], remaining, domain)
            if x is None:
                return None
            args[inner] = x
            return Witness(tuple(args[i] for i in range(len(terms))))
        i = outer_slots[slot_idx]
        for v, x in poly_values_with_args(terms[i], domain, remaining):
            args[i] = x
            found = rec(slot_idx + 1, remaining - v, args)
            if found is not None:
                return found
        return None

    return rec(0, n, {})


def offset_universal_check(terms: Sequence[Term], domain: SumDomain,
                           offsets: Iterable[int], bound: int,
                           workers: int | None = None) -> ExceptionReport:
    """Exceptions of union over r in offsets of (sumset + r) on [0, bound]."""
    offsets = tuple(sorted(set(offsets)))
    if not offsets or min(offsets) < 0:
        raise ValueError("offsets must be a nonempty set of integers >= 0")
    base = range_sieve(terms, domain, bound, workers)
    mask = (1 << (bound + 1)) - 1
    bits = 0
    for r in offsets:
        bits |= base.bits << r
    bitset = RangeBitset(bound, bits & mask)
    missing = tuple(bitset.missing())
    _verify_non_representable(terms, domain, missing, offsets)
    return ExceptionReport(TripleSum(terms, domain), bound, missing, offsets)
