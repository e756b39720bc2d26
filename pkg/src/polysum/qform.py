"""Diagonal ternary quadratic forms with per-variable congruence conditions.

Exception sets are computed by explicit value-grid sieves (numpy), never by
local or genus reasoning; geometric-arithmetic family sets give the closed
descriptions they are compared against.  The reduction machinery converts
polygonal sums into arithmetic progressions represented by a conditioned
form, via the square completion of each term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

from .polycore import SumDomain, TripleSum, square_completion
from .sumset import range_sieve


class ConstructionCheckError(AssertionError):
    """A reduction failed its range verification at construction."""


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceCondition:
    """Allowed residues of a form variable, with an optional one-sided bound.

    Over Z a symmetric condition carries residues closed under negation;
    the one-sided ``lower`` bound is used by naturals-domain reductions,
    whose substituted variable is bounded below instead.
    """

    modulus: int
    residues: tuple[int, ...]
    lower: int | None = None

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if any(not 0 <= r < self.modulus for r in self.residues):
            raise ValueError("residues must lie in [0, modulus)")

    def allows(self, value: int) -> bool:
        if self.lower is not None and value < self.lower:
            return False
        return value % self.modulus in self.residues


@dataclass(frozen=True)
class DiagonalTernaryForm:
    """a x^2 + b y^2 + c z^2 with optional per-variable conditions."""

    coefficients: tuple[int, int, int]
    conditions: tuple[CongruenceCondition | None, ...] = (None, None, None)

    def __post_init__(self) -> None:
        if len(self.coefficients) != 3 or min(self.coefficients) < 1:
            raise ValueError("need three positive coefficients")
        if len(self.conditions) != 3:
            raise ValueError("need one condition slot per variable")

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class Family:
    """The set {scale * ratio^k * (modulus*l + residue) : k, l >= 0}.

    ratio == 1 pins k = 0.  Membership divides out powers of the ratio and
    reduces; every power is tried, so families whose ratio divides the
    progression are still decided exactly.
    """

    scale: int
    ratio: int
    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.scale < 1 or self.modulus < 1:
            raise ValueError("scale and modulus must be >= 1")
        if self.ratio not in (1, 4, 9, 16, 25):
            raise ValueError("ratio must be one of 1, 4, 9, 16, 25")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")

    def contains(self, n: int) -> bool:
        if n < 0 or n % self.scale:
            return False
        m = n // self.scale
        while True:
            if m % self.modulus == self.residue:
                return True
            if self.ratio == 1 or m == 0 or m % self.ratio:
                return False
            m //= self.ratio

    def members_upto(self, bound: int) -> list[int]:
        out = []
        if self.residue == 0 and bound >= 0:
            out.append(0)
        base = self.scale
        while base <= bound:
            l = 0
            while True:
                v = base * (self.modulus * l + self.residue)
                if v > bound:
                    break
                if v:
                    out.append(v)
                l += 1
            if self.ratio == 1:
                break
            base *= self.ratio
        return sorted(set(out))


@dataclass(frozen=True)
class FamilySet:
    families: tuple[Family, ...]

    def contains(self, n: int) -> bool:
        return any(f.contains(n) for f in self.families)

    def members_upto(self, bound: int) -> list[int]:
        out: set[int] = set()
        for f in self.families:
            out.update(f.members_upto(bound))
        return sorted(out)


@dataclass(frozen=True)
class ReductionEntry:
    """n in source  <=>  multiplier*n + constant represented by the form."""

    source: TripleSum
    multiplier: int
    constant: int
    form: DiagonalTernaryForm


# ---------------------------------------------------------------------------
# value grids
# ---------------------------------------------------------------------------

def _variable_values(coef: int, cond: CongruenceCondition | None,
                     top: int) -> np.ndarray:
    """Sorted distinct values coef * y^2 <= top over allowed y."""
    if top < 0:
        return np.empty(0, dtype=np.int64)
    ymax = isqrt(top // coef)
    if cond is None:
        ys = np.arange(0, ymax + 1, dtype=np.int64)
    else:
        lo = -ymax if cond.lower is None else max(cond.lower, -ymax)
        ys = np.arange(lo, ymax + 1, dtype=np.int64)
        ys = ys[np.isin(np.mod(ys, cond.modulus), cond.residues)]
    vals = coef * ys * ys
    return np.unique(vals[vals <= top])


def _reachable(form: DiagonalTernaryForm, top: int) -> np.ndarray:
    """Boolean bitmap over [0, top] of values represented by the form."""
    order = sorted(range(3), key=lambda i: -form.coefficients[i])
    s = [_variable_values(form.coefficients[i], form.conditions[i], top)
         for i in order]
    pair = (s[0][:, None] + s[1][None, :]).ravel()
    pair = pair[pair <= top]
    bitmap = np.zeros(top + 1, dtype=bool)
    bitmap[pair] = True
    out = np.zeros(top + 1, dtype=bool)
    for v in s[2].tolist():
        out[v:] |= bitmap[: top + 1 - v]
    return out


# ---------------------------------------------------------------------------
# representation and exception sets
# ---------------------------------------------------------------------------

def qf_represents(form: DiagonalTernaryForm, n: int) -> tuple[int, int, int] | None:
    """A solution (x, y, z) honoring the conditions, or None (exhaustive)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c = form.coefficients
    ca, cb, cc = form.conditions

    def rng(coef: int, cond: CongruenceCondition | None, top: int):
        r = isqrt(top // coef)
        if cond is None:
            return range(0, r + 1)
        lo = -r if cond.lower is None else max(cond.lower, -r)
        return (v for v in range(lo, r + 1) if cond.allows(v))

    for x in rng(a, ca, n):
        rx = n - a * x * x
        for y in rng(b, cb, rx):
            rz = rx - b * y * y
            if rz % c:
                continue
            z2 = rz // c
            z = isqrt(z2)
            if z * z != z2:
                continue
            for cand in (z, -z):
                if cc is None:
                    if cand >= 0:
                        return (x, y, cand)
                elif cc.allows(cand):
                    return (x, y, cand)
    return None


def qf_exception_set(form: DiagonalTernaryForm, bound: int) -> list[int]:
    """Exact list of n <= bound not represented by the form."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    return np.flatnonzero(~_reachable(form, bound)).tolist()


def family_enumerate(families: FamilySet, bound: int) -> list[int]:
    return families.members_upto(bound)


def family_contains(families: FamilySet, n: int) -> bool:
    return families.contains(n)


def verify_catalog_form(form: DiagonalTernaryForm, families: FamilySet,
                        bound: int) -> tuple[bool, list[int], list[int]]:
    """Compare sieved exceptions with the family description on [0, bound].

    Returns (equal, sieve-only, family-only).
    """
    sieved = qf_exception_set(form, bound)
    listed = families.members_upto(bound)
    s, t = set(sieved), set(listed)
    return s == t, sorted(s - t), sorted(t - s)


def three_square_excluded(n: int) -> bool:
    """True iff n is 4^k (8l + 7), the numbers missed by x^2+y^2+z^2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while n % 4 == 0 and n > 0:
        n //= 4
    return n % 8 == 7


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def canonical_reduction(sum_: TripleSum, check_bound: int = 500) -> ReductionEntry:
    """Convert a polygonal sum into an equivalent conditioned-form statement.

    The multiplier is the lcm of the square-completion stretches 8(m-2) of
    the non-square terms (1 when every order is 4).  Each term a*p_m maps to
    form coefficient M*a/(8(m-2)) on the substituted variable
    y = (2m-4)x - (m-4), contributing c*(m-4)^2 to the constant; square
    terms keep a free variable with coefficient M*a.  The equivalence is
    verified on [0, check_bound] at construction.
    """
    terms = sum_.terms
    domain = sum_.domain
    stretches = [square_completion(t)[0] for t in terms if t.order != 4]
    M = lcm(*stretches) if stretches else 1
    coeffs: list[int] = []
    conds: list[CongruenceCondition | None] = []
    constant = 0
    for t in terms:
        m = t.order
        if m == 4:
            coeffs.append(M * t.coefficient)
            conds.append(None)
            continue
        stretch, offset, step, residue = square_completion(t)
        c = M * t.coefficient // stretch
        coeffs.append(c)
        constant += c * offset
        if domain is SumDomain.INTEGERS:
            allowed = tuple(sorted({residue % step, (-residue) % step}))
            conds.append(CongruenceCondition(step, allowed))
        else:
            conds.append(CongruenceCondition(step, ((-residue) % step,),
                                             lower=-residue))
    if len(coeffs) != 3:
        raise ValueError("canonical_reduction expects a three-term sum")
    entry = ReductionEntry(sum_, M, constant,
                           DiagonalTernaryForm(tuple(coeffs), tuple(conds)))
    ok, counterexample = verify_reduction(entry, check_bound)
    if not ok:
        raise ConstructionCheckError(
            f"reduction of {sum_} fails at n={counterexample}")
    return entry


def _progression_bitmap(form: DiagonalTernaryForm, multiplier: int,
                        constant: int, bound: int) -> np.ndarray:
    """bitmap[n] = (multiplier*n + constant is represented by the form)."""
    top = multiplier * bound + constant
    idx = sorted(range(3), key=lambda i: -form.coefficients[i])
    s = [_variable_values(form.coefficients[i], form.conditions[i], top)
         for i in idx]
    pair = (s[0][:, None] + s[1][None, :]).ravel()
    pair = pair[pair <= top]
    out = np.zeros(bound + 1, dtype=bool)
    residues = pair % multiplier
    for w in s[2].tolist():
        need = (constant - w) % multiplier
        hits = pair[residues == need]
        ns = (hits + (w - constant)) // multiplier
        ns = ns[(ns >= 0) & (ns <= bound)]
        out[ns] = True
    return out


def verify_reduction(entry: ReductionEntry, bound: int
                     ) -> tuple[bool, int | None]:
    """Check both directions of the equivalence for all n <= bound."""
    sums = range_sieve(entry.source.terms, entry.source.domain, bound)
    left = np.ones(bound + 1, dtype=bool)
    left[sums.missing()] = False
    right = _progression_bitmap(entry.form, entry.multiplier, entry.constant,
                                bound)
    diff = np.flatnonzero(left != right)
    if len(diff) == 0:
        return True, None
    return False, int(diff[0])


def mapped_exception_scan(form: DiagonalTernaryForm, multiplier: int,
                          constant: int, bound: int) -> list[int]:
    """{n <= bound : multiplier*n + constant not represented by form}."""
    if multiplier < 1:
        raise ValueError("multiplier must be >= 1")
    hit = _progression_bitmap(form, multiplier, constant, bound)
    return np.flatnonzero(~hit).tolist()


# ---------------------------------------------------------------------------
# constrained counting
# ---------------------------------------------------------------------------

def rep_parity_counts(coefficients: Sequence[int], top: int
                      ) -> tuple[np.ndarray, np.ndarray]:
    """Per-value solution counts of sum coef_i * x_i^2, split by the parity
    of the first variable.  Returns (odd_counts, even_counts), each indexed
    by value in [0, top].  Signs and zeros are counted in full.
    """
    if top < 0:
        raise ValueError("top must be >= 0")
    coefficients = list(coefficients)
    if len(coefficients) not in (2, 3):
        raise ValueError("need two or three coefficients")
    rest = coefficients[1:]
    ymax = isqrt(top // rest[0])
    ys = np.arange(-ymax, ymax + 1, dtype=np.int64)
    tail = rest[0] * ys * ys
    if len(rest) == 2:
        zmax = isqrt(top // rest[1])
        zs = np.arange(-zmax, zmax + 1, dtype=np.int64)
        tail = (tail[:, None] + (rest[1] * zs * zs)[None, :]).ravel()
    tail = tail[tail <= top]
    tail_counts = np.bincount(tail, minlength=top + 1)
    odd = np.zeros(top + 1, dtype=np.int64)
    even = np.zeros(top + 1, dtype=np.int64)
    a = coefficients[0]
    x = 0
    while a * x * x <= top:
        v = a * x * x
        mult = 1 if x == 0 else 2
        target = even if x % 2 == 0 else odd
        target[v:] += mult * tail_counts[: top + 1 - v]
        x += 1
    return odd, even


def rep_count_constrained(coefficients: Sequence[int], n: int,
                          variable: int | None = None, modulus: int = 2,
                          residues: Iterable[int] = (1,)) -> int:
    """Exact number of integer solution tuples of sum coef_i * x_i^2 = n.

    Works for two or three variables.  With ``variable`` set, only tuples
    whose ``variable``-th entry is congruent to one of ``residues`` modulo
    ``modulus`` are counted.  Signs and zeros are enumerated in full; no
    orbit shortcuts.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coefficients = list(coefficients)
    if len(coefficients) not in (2, 3):
        raise ValueError("need two or three coefficients")
    residues = {r % modulus for r in residues}

    def signed_range(coef: int, top: int) -> range:
        r = isqrt(top // coef) if top >= 0 else -1
        return range(-r, r + 1)

    count = 0

    def rec(i: int, remaining: int, tup: list[int]) -> None:
        nonlocal count
        if i == len(coefficients) - 1:
            coef = coefficients[i]
            if remaining % coef:
                return
            z2 = remaining // coef
            z = isqrt(z2)
            if z * z != z2:
                return
            for cand in ({z, -z} if z else {0}):
                full = tup + [cand]
                if variable is None or full[variable] % modulus in residues:
                    count += 1
            return
        for x in signed_range(coefficients[i], remaining):
            rec(i + 1, remaining - coefficients[i] * x * x, tup + [x])

    rec(0, n, [])
    return count
