"""Frontier elimination over candidate spaces of weighted polygonal triples.

A screen walks an (a priori infinite) space of triples and splits it into
survivors (no exception up to the scan bound) and eliminated regions, each
carrying a machine-checkable certificate:

* ``direct``            -- one concrete triple with recorded missing values.
* ``coefficient-tail``  -- beyond a coefficient threshold the open slots
                           contribute only 0 below the witness, so the
                           witness stays missing for every order at once.
* ``order-tail``        -- beyond an order cutoff the open slot contributes
                           only {0, a} below the witness.
* ``frontier-tail``     -- open slots whose coefficient*order product lies
                           above a floor; for every coefficient assignment
                           a missing value below the floor exists (counting:
                           three two-element value sets cannot cover a long
                           initial segment, so the search always closes).
* ``parametric-tail``   -- a coefficient tail that holds for every choice of
                           the remaining slots' coefficients at their fixed
                           orders (checked value by value plus the
                           degenerate above-bound case).

Tail thresholds come from the smallest checked witness, which may be looser
than a hand-optimized cutoff; certificates are validated against their own
stated condition, never against an external table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polycore import SumDomain, Term, TripleSum, poly_values_upto
from .sumset import member_with_witness, range_sieve

DEFAULT_SEARCH_BOUND = 2000
DEFAULT_SCAN_BOUND = 100_000

TermKey = tuple[int, int]  # (coefficient, order)


class SpaceNotClosable(RuntimeError):
    """A tail cutoff could not be established below the search bound."""


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EliminationCertificate:
    """One eliminated region of a candidate space.

    ``fixed`` holds the concrete terms shared by the whole region.  The
    meaning of the remaining fields depends on ``kind``:

    direct:            fixed is the full triple; ``witnesses`` are missing.
    order-tail:        one open slot with coefficient ``open_coefficient``
                       and every order > ``threshold``.
    coefficient-tail:  ``open_count`` open slots, each with any order and
                       coefficient > ``threshold`` (sorted spaces only make
                       the first of them meaningful).
    frontier-tail:     ``open_count`` slots with product > ``threshold``;
                       for every coefficient assignment a gap of multiplicity
                       ``gap_count`` exists within [0, check_bound].
    parametric-tail:   ``open_count`` slots with coefficient > ``threshold``
                       at their listed ``parametric_orders`` siblings; the
                       check enumerated every sibling coefficient up to
                       ``check_bound`` plus the above-bound case.
    """

    kind: str
    domain: SumDomain
    fixed: tuple[TermKey, ...]
    witnesses: tuple[int, ...] = ()
    open_coefficient: int = 0
    open_count: int = 0
    threshold: int = 0
    check_bound: int = 0
    gap_count: int = 1
    parametric_orders: tuple[int, ...] = ()
    coefficient_cap: int | None = None

    @property
    def witness(self) -> int:
        return self.witnesses[0]


def _stream(key: TermKey, domain: SumDomain, bound: int) -> list[int]:
    return poly_values_upto(Term(key[0], key[1]), domain, bound)


def _gaps_of_sets(value_sets: Sequence[Iterable[int]], bound: int,
                  count: int) -> list[int]:
    sums = {0}
    for vs in value_sets:
        sums = {s + v for s in sums for v in vs if s + v <= bound}
    out = []
    for n in range(bound + 1):
        if n not in sums:
            out.append(n)
            if len(out) == count:
                break
    return out


def _assignment_gaps_ok(fixed_sets: list, open_count: int, bound: int,
                        gap_count: int, coef_cap: int | None) -> bool:
    """Every assignment of {0, a} profiles to the open slots leaves
    ``gap_count`` missing values <= bound (a in [1, cap] or above bound)."""
    choices = (list(range(1, (coef_cap or bound) + 1)) + [None])

    def rec(i: int, sets: list) -> bool:
        if i == open_count:
            return len(_gaps_of_sets(sets, bound, gap_count)) == gap_count
        for a in choices:
            vals = (0,) if a is None else (0, a)
            if not rec(i + 1, sets + [vals]):
                return False
        return True

    return rec(0, fixed_sets)


def _parametric_threshold_ok(fixed: Sequence[Term], closed_slots: int,
                             parametric_orders: Sequence[int], domain: SumDomain,
                             check_bound: int, threshold: int,
                             gap_count: int) -> bool:
    """For every coefficient assignment to the parametric sibling slots the
    sum of fixed streams and sibling streams misses ``gap_count`` values not
    above ``threshold`` (so closed slots with coefficient > threshold cannot
    fill them)."""
    base = [poly_values_upto(t, domain, check_bound) for t in fixed]

    def rec(i: int, sets: list) -> bool:
        if i == len(parametric_orders):
            found = _gaps_of_sets(sets, check_bound, gap_count)
            return len(found) == gap_count and found[-1] <= threshold
        for a in list(range(1, check_bound + 1)) + [None]:
            extra = ([] if a is None else
                     [poly_values_upto(Term(a, parametric_orders[i]), domain,
                                       check_bound)])
            if not rec(i + 1, sets + extra):
                return False
        return True

    return rec(0, list(base))


def verify_certificate(cert: EliminationCertificate) -> bool:
    """Re-check a certificate from scratch against its stated condition."""
    domain = cert.domain
    fixed_terms = [Term(a, m) for a, m in cert.fixed]
    if cert.kind == "direct":
        sum_ = TripleSum(tuple(fixed_terms), domain)
        return all(member_with_witness(sum_, n) is None for n in cert.witnesses)
    if cert.kind == "order-tail":
        a, k = cert.open_coefficient, cert.threshold
        top = max(cert.witnesses)
        # every order above k keeps the slot's values in {0, a} below top
        if a * (k + 1) <= top:
            return False
        if domain is SumDomain.INTEGERS and a * (k + 1 - 3) <= top:
            return False
        sets = [_stream(key, domain, top) for key in cert.fixed] + [(0, a)]
        gaps = _gaps_of_sets(sets, top, len(cert.witnesses))
        return list(cert.witnesses) == gaps
    if cert.kind == "coefficient-tail":
        top = max(cert.witnesses)
        if cert.threshold < top:
            return False
        sets = [_stream(key, domain, top) for key in cert.fixed]
        sets += [(0,)] * cert.open_count
        gaps = _gaps_of_sets(sets, top, len(cert.witnesses))
        return list(cert.witnesses) == gaps
    if cert.kind == "frontier-tail":
        if cert.threshold != cert.check_bound + 1:
            return False
        base = [poly_values_upto(t, domain, cert.check_bound) for t in fixed_terms]
        return _assignment_gaps_ok(base, cert.open_count, cert.check_bound,
                                   cert.gap_count, cert.coefficient_cap)
    if cert.kind == "parametric-tail":
        return _parametric_threshold_ok(fixed_terms, cert.open_count,
                                        cert.parametric_orders, domain,
                                        cert.check_bound, cert.threshold,
                                        cert.gap_count)
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


# ---------------------------------------------------------------------------
# tail cutoffs (public primitives)
# ---------------------------------------------------------------------------

def order_tail_cutoff(fixed_terms: Sequence[Term], third_coefficient: int,
                      domain: SumDomain, search_bound: int = DEFAULT_SEARCH_BOUND,
                      gap_count: int = 1) -> tuple[list[int], int] | None:
    """Witnesses and cutoff K eliminating every third-slot order > K.

    The smallest n <= search_bound outside (pair sumset + {0, c}) gives
    K = n // c + 3: for any order above K the third term contributes only
    {0, c} below n, so n stays missing.  None if the range is saturated.
    """
    if third_coefficient < 1:
        raise ValueError("coefficient must be >= 1")
    pair = range_sieve(fixed_terms, domain, search_bound)
    c = third_coefficient
    found = []
    for n in range(search_bound + 1):
        if n in pair or (n >= c and (n - c) in pair):
            continue
        found.append(n)
        if len(found) == gap_count:
            return found, found[-1] // c + 3
    return None


def coefficient_tail_cutoff(fixed_terms: Sequence[Term], domain: SumDomain,
                            search_bound: int = DEFAULT_SEARCH_BOUND,
                            gap_count: int = 1) -> tuple[list[int], int] | None:
    """Witnesses and cutoff C eliminating every third coefficient > C.

    The smallest n outside the fixed-pair sumset works for every order at
    once: a third term with coefficient > n contributes only 0 below n.
    """
    pair = range_sieve(fixed_terms, domain, search_bound)
    found = pair.first_missing(gap_count)
    if len(found) < gap_count:
        return None
    return found, found[-1]


# ---------------------------------------------------------------------------
# candidate spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CandidateSpace:
    """A screening space of term triples.

    ``fixed-orders`` style: finitely many order configurations, free
    coefficients sorted inside equal-order groups.  ``term-multisets``
    style: multisets of terms (a, m), orders unbounded, coefficients free
    or capped.
    """

    name: str
    domain: SumDomain
    style: str  # "fixed-orders" | "term-multisets"
    order_configs: tuple[tuple[int, ...], ...] = ()
    coefficient_cap: int | None = None
    min_max_order: int = 0
    min_max_coefficient: int = 1
    scan_bound: int = DEFAULT_SCAN_BOUND
    description: str = ""

    def contains(self, triple: Sequence[TermKey]) -> bool:
        if max(m for _, m in triple) < self.min_max_order:
            return False
        if max(a for a, _ in triple) < self.min_max_coefficient:
            return False
        if self.coefficient_cap is not None:
            if max(a for a, _ in triple) > self.coefficient_cap:
                return False
        if self.style == "fixed-orders":
            orders = tuple(sorted(m for _, m in triple))
            if orders not in {tuple(sorted(c)) for c in self.order_configs}:
                return False
        return True


PRESETS: dict[str, CandidateSpace] = {
    "liouville": CandidateSpace(
        name="liouville", domain=SumDomain.NATURALS, style="fixed-orders",
        order_configs=((3, 3, 3),), scan_bound=10_000,
        description="triples a*p3+b*p3+c*p3 over N"),
    "thm-1.1i": CandidateSpace(
        name="thm-1.1i", domain=SumDomain.INTEGERS, style="fixed-orders",
        order_configs=tuple((k, k, k) for k in [4, 5] + list(range(7, 41))),
        scan_bound=10_000,
        description="same-order triples a*pk+b*pk+c*pk over Z, k in {4,5,7..40}"),
    "mixed-34-list": CandidateSpace(
        name="mixed-34-list", domain=SumDomain.NATURALS, style="fixed-orders",
        order_configs=((3, 3, 4), (3, 4, 4)), scan_bound=10_000,
        description="coefficient triples with order multiset {3,3,4} or {3,4,4} over N"),
    "thm-1.3": CandidateSpace(
        name="thm-1.3", domain=SumDomain.NATURALS, style="term-multisets",
        coefficient_cap=1, min_max_order=5, scan_bound=10_000,
        description="unit triples p_i+p_j+p_k over N with max order >= 5"),
    "thm-1.4": CandidateSpace(
        name="thm-1.4", domain=SumDomain.NATURALS, style="term-multisets",
        coefficient_cap=None, min_max_order=5, min_max_coefficient=2,
        scan_bound=100_000,
        description="weighted triples over N, max order >= 5, some coefficient > 1"),
    "unique-29": CandidateSpace(
        name="unique-29", domain=SumDomain.NATURALS, style="term-multisets",
        coefficient_cap=1, scan_bound=10_000,
        description="unit triples over N screened for a single exception"),
}


@dataclass(frozen=True)
class ScreenReport:
    space: CandidateSpace
    bound: int
    search_bound: int
    survivors: tuple[tuple[TermKey, ...], ...]
    eliminations: tuple[EliminationCertificate, ...]
    derived_bounds: dict = field(default_factory=dict, compare=False)
    unique_exceptions: tuple[tuple[tuple[TermKey, ...], int], ...] = ()


def canonical_triple(terms: Iterable[TermKey]) -> tuple[TermKey, ...]:
    """Display order: sorted by (order, coefficient)."""
    return tuple(sorted(terms, key=lambda t: (t[1], t[0])))


def _display_key(triple: Sequence[TermKey]) -> tuple:
    """Lexicographic on (orders..., coefficients...)."""
    canon = canonical_triple(triple)
    return tuple(m for _, m in canon) + tuple(a for a, _ in canon)


def triple_to_sum(triple: Sequence[TermKey], domain: SumDomain) -> TripleSum:
    return TripleSum(tuple(Term(a, m) for a, m in triple), domain)


def format_triple(triple: Sequence[TermKey]) -> str:
    return "+".join(str(Term(a, m)) for a, m in canonical_triple(triple))


# ---------------------------------------------------------------------------
# shared scanning helpers
# ---------------------------------------------------------------------------

def _scan_concrete(triple: Sequence[TermKey], domain: SumDomain, bound: int,
                   stage: int, want: int) -> list[int]:
    """Up to `want` exceptions of the triple within [0, bound]; a staged
    pass up to `stage` short-circuits triples that fail early."""
    terms = [Term(a, m) for a, m in triple]
    if stage < bound:
        quick = range_sieve(terms, domain, stage).first_missing(want)
        if len(quick) == want:
            return quick
    return range_sieve(terms, domain, bound).first_missing(want)


class _Collector:
    """Shared survivor/unique/elimination bookkeeping for both drivers."""

    def __init__(self, space: CandidateSpace, bound: int, search_bound: int,
                 gap_count: int):
        self.space = space
        self.bound = bound
        self.search_bound = search_bound
        self.gap_count = gap_count
        self.survivors: list[tuple[TermKey, ...]] = []
        self.uniques: list[tuple[tuple[TermKey, ...], int]] = []
        self.elims: list[EliminationCertificate] = []
        self.derived: dict = {}

    def concrete(self, triple: Sequence[TermKey]) -> None:
        triple = canonical_triple(triple)
        if not self.space.contains(triple):
            return
        exc = _scan_concrete(triple, self.space.domain, self.bound,
                             self.search_bound, self.gap_count)
        if len(exc) >= self.gap_count:
            self.elims.append(EliminationCertificate(
                kind="direct", domain=self.space.domain, fixed=triple,
                witnesses=tuple(exc[: self.gap_count])))
        elif not exc:
            if self.gap_count == 1:
                self.survivors.append(triple)
        elif len(exc) == 1:  # only reachable when gap_count == 2
            self.uniques.append((triple, exc[0]))

    def report(self) -> ScreenReport:
        return ScreenReport(
            self.space, self.bound, self.search_bound,
            tuple(sorted(set(self.survivors), key=_display_key)),
            tuple(self.elims), self.derived,
            tuple(sorted(set(self.uniques), key=lambda e: _display_key(e[0]))))


# ---------------------------------------------------------------------------
# driver: fixed order configurations, free coefficients
# ---------------------------------------------------------------------------

def _screen_fixed_orders(space: CandidateSpace, bound: int, search_bound: int,
                         gap_count: int) -> ScreenReport:
    domain = space.domain
    col = _Collector(space, bound, search_bound, gap_count)

    for orders in space.order_configs:
        n_slots = len(orders)

        def close(prefix: list[int]) -> None:
            s = len(prefix)
            if s == n_slots:
                col.concrete([(prefix[i], orders[i]) for i in range(n_slots)])
                return
            fixed = [Term(prefix[i], orders[i]) for i in range(s)]
            same = [i for i in range(s, n_slots) if orders[i] == orders[s]]
            para = [orders[i] for i in range(s + 1, n_slots)
                    if orders[i] != orders[s]]
            threshold = _close_coefficient_slot(fixed, para, domain,
                                                search_bound, gap_count)
            if threshold is None:
                raise SpaceNotClosable(
                    f"{space.name}: coefficient slot {s} of {orders} not "
                    f"closable at search bound {search_bound}")
            witnesses, limit, check_bound = threshold
            if para:
                col.elims.append(EliminationCertificate(
                    kind="parametric-tail", domain=domain,
                    fixed=tuple((t.coefficient, t.order) for t in fixed),
                    witnesses=tuple(witnesses), open_count=len(same),
                    threshold=limit, check_bound=check_bound,
                    gap_count=gap_count, parametric_orders=tuple(para)))
            else:
                col.elims.append(EliminationCertificate(
                    kind="coefficient-tail", domain=domain,
                    fixed=tuple((t.coefficient, t.order) for t in fixed),
                    witnesses=tuple(witnesses), open_count=len(same),
                    threshold=limit, gap_count=gap_count))
            col.derived.setdefault(orders, {})[f"slot{s}"] = limit
            lo = prefix[-1] if (s > 0 and orders[s - 1] == orders[s]) else 1
            for coef in range(lo, limit + 1):
                close(prefix + [coef])

        close([])

    return col.report()


def _close_coefficient_slot(fixed: Sequence[Term], para_orders: list[int],
                            domain: SumDomain, search_bound: int,
                            gap_count: int
                            ) -> tuple[list[int], int, int] | None:
    """Close a coefficient slot: find a threshold C such that coefficient > C
    (together with the later equal-order slots) is impossible for *every*
    assignment of coefficients to the remaining fixed-order sibling slots.

    Returns (witnesses, C, check bound); witnesses are the gaps of the fixed
    streams alone when there are no sibling slots.
    """
    limit = 4
    while limit <= search_bound:
        worst = 0
        ok = True
        base = [poly_values_upto(t, domain, limit) for t in fixed]

        def rec(i: int, sets: list) -> None:
            nonlocal worst, ok
            if not ok:
                return
            if i == len(para_orders):
                found = _gaps_of_sets(sets, limit, gap_count)
                if len(found) < gap_count:
                    ok = False
                else:
                    worst = max(worst, found[-1])
                return
            for a in list(range(1, limit + 1)) + [None]:
                extra = ([] if a is None else
                         [poly_values_upto(Term(a, para_orders[i]), domain, limit)])
                rec(i + 1, sets + extra)

        rec(0, list(base))
        if ok:
            if not para_orders:
                witnesses = _gaps_of_sets(base, limit, gap_count)
                return witnesses, witnesses[-1], limit
            return [worst], worst, limit
        limit *= 2
    return None


# ---------------------------------------------------------------------------
# driver: term multisets (orders unbounded, coefficients free or capped)
# ---------------------------------------------------------------------------

def _term_sort_key(t: TermKey) -> tuple[int, int, int]:
    a, m = t
    return (a * m, m, a)


def _terms_with_product_upto(q: int, cap: int | None) -> list[TermKey]:
    out = []
    for a in range(1, q // 3 + 1):
        if cap is not None and a > cap:
            break
        for m in range(3, q // a + 1):
            out.append((a, m))
    return sorted(out, key=_term_sort_key)


def _frontier_floor(fixed: Sequence[Term], open_count: int, domain: SumDomain,
                    search_bound: int, gap_count: int, cap: int | None,
                    start: int) -> tuple[int, int]:
    """Smallest checked bound Q with: every coefficient assignment to the
    open slots (streams within {0, a} below Q) leaves `gap_count` gaps <= Q.
    Returns (product floor Q + 1, check bound Q)."""
    limit = start
    while limit <= search_bound:
        base = [poly_values_upto(t, domain, limit) for t in fixed]
        if _assignment_gaps_ok(base, open_count, limit, gap_count, cap):
            return limit + 1, limit
        limit *= 2
    raise SpaceNotClosable(
        f"frontier around {[str(t) for t in fixed]} not closable at "
        f"search bound {search_bound}")


def _screen_term_multisets(space: CandidateSpace, bound: int, search_bound: int,
                           gap_count: int) -> ScreenReport:
    if space.domain is not SumDomain.NATURALS:
        raise ValueError("term-multiset screening is defined over N")
    domain = space.domain
    cap = space.coefficient_cap
    col = _Collector(space, bound, search_bound, gap_count)

    # level 0: all three slots with coefficient*order above a floor
    floor0, cb0 = _frontier_floor([], 3, domain, search_bound, gap_count, cap,
                                  start=8)
    col.elims.append(EliminationCertificate(
        kind="frontier-tail", domain=domain, fixed=(), open_count=3,
        threshold=floor0, check_bound=cb0, gap_count=gap_count,
        coefficient_cap=cap))
    col.derived["product-floor"] = floor0

    for t1 in _terms_with_product_upto(floor0 - 1, cap):
        term1 = Term(*t1)
        # level 1: both remaining slots above a pair floor
        floor1, cb1 = _frontier_floor([term1], 2, domain, search_bound,
                                      gap_count, cap, start=32)
        col.elims.append(EliminationCertificate(
            kind="frontier-tail", domain=domain, fixed=(t1,), open_count=2,
            threshold=floor1, check_bound=cb1, gap_count=gap_count,
            coefficient_cap=cap))
        col.derived[f"pair-floor {Term(*t1)}"] = floor1
        for t2 in _terms_with_product_upto(floor1 - 1, cap):
            if _term_sort_key(t2) < _term_sort_key(t1):
                continue
            term2 = Term(*t2)
            # level 2: coefficient tail for the last slot
            coef_tail = coefficient_tail_cutoff([term1, term2], domain,
                                                search_bound, gap_count)
            if coef_tail is None:
                raise SpaceNotClosable(
                    f"coefficient tail open after {Term(*t1)}+{Term(*t2)}")
            coef_wit, C = coef_tail
            if cap is None or C < cap:
                col.elims.append(EliminationCertificate(
                    kind="coefficient-tail", domain=domain, fixed=(t1, t2),
                    witnesses=tuple(coef_wit), open_count=1, threshold=C,
                    gap_count=gap_count))
            for a3 in range(1, (min(C, cap) if cap else C) + 1):
                # level 3: order tail for the last slot
                tail = order_tail_cutoff([term1, term2], a3, domain,
                                         search_bound, gap_count)
                if tail is None:
                    raise SpaceNotClosable(
                        f"order tail open after {Term(*t1)}+{Term(*t2)}+{a3}p_k")
                wit, K = tail
                col.elims.append(EliminationCertificate(
                    kind="order-tail", domain=domain, fixed=(t1, t2),
                    witnesses=tuple(wit), open_coefficient=a3, threshold=K,
                    gap_count=gap_count))
                for m3 in range(3, K + 1):
                    t3 = (a3, m3)
                    if _term_sort_key(t3) < _term_sort_key(t2):
                        continue
                    col.concrete([t1, t2, t3])

    return col.report()


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def screen(space: CandidateSpace | str, bound: int | None = None,
           search_bound: int = DEFAULT_SEARCH_BOUND) -> ScreenReport:
    """Split the space into survivors and certified eliminations."""
    if isinstance(space, str):
        space = PRESETS[space]
    bound = bound if bound is not None else space.scan_bound
    search_bound = min(search_bound, bound)
    if space.style == "fixed-orders":
        return _screen_fixed_orders(space, bound, search_bound, gap_count=1)
    return _screen_term_multisets(space, bound, search_bound, gap_count=1)


def unique_exception_scan(space: CandidateSpace | str, bound: int | None = None,
                          search_bound: int = DEFAULT_SEARCH_BOUND
                          ) -> list[tuple[tuple[TermKey, ...], int]]:
    """Triples of the space with exactly one exception <= bound.

    Tail regions are closed with two witnesses each, so every symbolically
    eliminated triple provably has at least two exceptions.
    """
    if isinstance(space, str):
        space = PRESETS[space]
    bound = bound if bound is not None else space.scan_bound
    search_bound = min(search_bound, bound)
    if space.style == "fixed-orders":
        report = _screen_fixed_orders(space, bound, search_bound, gap_count=2)
    else:
        report = _screen_term_multisets(space, bound, search_bound, gap_count=2)
    return list(report.unique_exceptions)


def compare_with_catalog(report: ScreenReport | Iterable[tuple[TermKey, ...]],
                         catalog: Iterable[tuple[TermKey, ...]]
                         ) -> tuple[list[tuple[TermKey, ...]], list[tuple[TermKey, ...]]]:
    """(missing, extra) relative to the catalog; empty diff is acceptance."""
    got = report.survivors if isinstance(report, ScreenReport) else report
    got_set = {canonical_triple(t) for t in got}
    want_set = {canonical_triple(t) for t in catalog}
    missing = sorted(want_set - got_set, key=_display_key)
    extra = sorted(got_set - want_set, key=_display_key)
    return missing, extra


def _remove_sub_multiset(triple: Sequence[TermKey],
                         fixed: Sequence[TermKey]) -> list[TermKey] | None:
    rest = list(triple)
    for key in fixed:
        if key not in rest:
            return None
        rest.remove(key)
    return rest


def certificate_covers(cert: EliminationCertificate,
                       triple: Sequence[TermKey]) -> bool:
    """Whether the certificate's eliminated region contains the triple."""
    triple = canonical_triple(triple)
    rest = _remove_sub_multiset(triple, cert.fixed)
    if rest is None:
        return False
    if cert.kind == "direct":
        return rest == []
    if cert.kind == "order-tail":
        return (len(rest) == 1 and rest[0][0] == cert.open_coefficient
                and rest[0][1] > cert.threshold)
    if cert.kind == "coefficient-tail":
        # a slot with coefficient above the witness contributes only 0 below
        # it, whatever its order
        return (len(rest) == cert.open_count
                and all(a > cert.threshold for a, _ in rest))
    if cert.kind == "frontier-tail":
        if len(rest) != cert.open_count:
            return False
        if cert.coefficient_cap is not None:
            if any(a > cert.coefficient_cap for a, _ in rest):
                return False
        return all(a * m > cert.check_bound for a, m in rest)
    if cert.kind == "parametric-tail":
        # open_count slots must exceed the threshold; the rest must sit at
        # the sibling orders the check enumerated
        if len(rest) != cert.open_count + len(cert.parametric_orders):
            return False
        for orders_used in _pick_parametric(rest, list(cert.parametric_orders)):
            if all(a > cert.threshold for a, _ in orders_used):
                return True
        return False
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


def _pick_parametric(rest: list[TermKey], orders: list[TermKey]):
    """Yield the open-slot remainders over ways to assign sibling orders."""
    if not orders:
        yield rest
        return
    target = orders[0]
    for i, (a, m) in enumerate(rest):
        if m == target:
            yield from _pick_parametric(rest[:i] + rest[i + 1:], orders[1:])


def report_covers(report: ScreenReport, triple: Sequence[TermKey]) -> bool:
    """Every in-space triple must be a survivor, a recorded single-exception
    entry, or inside some certificate's region."""
    triple = canonical_triple(triple)
    if triple in report.survivors:
        return True
    if any(t == triple for t, _ in report.unique_exceptions):
        return True
    return any(certificate_covers(c, triple) for c in report.eliminations)
