"""Convexity decomposition and second-difference norms, with exact tails.

Everything here works on an :class:`AnalyzedFunction`: exact values on a
finite window [lo, hi] plus the guarantee (``outside_class``) that every
point at or beyond the window edges is convex and that consecutive
differences vanish at +-infinity.  A point n is convex (class ``plus``) when

    g(n+1) + g(n-1) >= 2 g(n),

concave (``minus``) otherwise; ties are convex.  Writing c2 for the centered
second difference and D(n) = g(n+1) - g(n), the guarantee makes both
infinite tails of sum |c2| telescoping sums of one-signed terms:

    sum_{n <= lo} |c2(n)| = D(lo) - lim_{n -> -inf} D(n) = g(lo+1) - g(lo),
    sum_{n >= hi} |c2(n)| = lim_{n -> +inf} D(n) - D(hi-1) = g(hi-1) - g(hi),

so the full series sum_{n in Z} |c2(n)| is the finite interior sum plus two
exact closed-form tail terms; no truncation error anywhere.  The same
telescoping evaluates the total variation of a maximal profile: the tails
are monotone, so each contributes the window-edge value itself.

Two guaranteed constructions are provided: any finitely supported lattice
function (zero tails are convex, with ties counting as convex), and any
maximal profile (hyperbola-envelope tails, see :mod:`maxreg.maximal`).

The two headline facts checked over index sets A, stated here once and
referred to by number throughout the API and reports:

* Theorem 1: the second-difference l1 norm of the maximal function of an
  indicator is at most three times that of the indicator itself.
* Lemma 1: the maximal function of an indicator is concave only at points
  of the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    IndexSet,
    LatticeFunction,
    central_second_difference,
    forward_difference,
    lp_norm,
)
from .maximal import MaximalProfile, maximal_profile, maximal_profile_fast

PLUS = "plus"
MINUS = "minus"

__all__ = [
    "PLUS",
    "MINUS",
    "AnalyzedFunction",
    "Chain",
    "DecompositionReport",
    "RatioRecord",
    "classify",
    "boundaries",
    "chains",
    "chain_sum_check",
    "second_norm",
    "funeq_rhs",
    "decompose",
    "lemma1_violations",
    "theorem1_report",
    "first_derivative_norms",
]


# ---------------------------------------------------------------------------
# Analyzed window
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnalyzedFunction:
    """Exact values on [lo, hi] with certified convex, flat-difference tails.

    ``outside_class`` certifies: every n <= lo and every n >= hi is convex,
    and g(n+1) - g(n) -> 0 as n -> +-inf.  All concave points therefore lie
    in the interior [lo+1, hi-1], where the second difference is computable
    from stored values alone.
    """

    lo: int
    hi: int
    values: tuple[Fraction, ...]
    outside_class: bool

    def value_at(self, n: int) -> Fraction:
        if not self.lo <= n <= self.hi:
            raise ValueError(f"n={n} outside analyzed window [{self.lo}, {self.hi}]")
        return self.values[n - self.lo]

    def second_difference(self, n: int) -> Fraction:
        """g(n+1) + g(n-1) - 2 g(n); defined on the interior only."""
        if not self.lo + 1 <= n <= self.hi - 1:
            raise ValueError(f"second difference at n={n} needs values outside the window")
        i = n - self.lo
        return self.values[i + 1] + self.values[i - 1] - 2 * self.values[i]

    @classmethod
    def from_lattice(cls, f: LatticeFunction,
                     lo: int | None = None, hi: int | None = None) -> "AnalyzedFunction":
        """Analyze a finitely supported function on [lo, hi].

        Defaults to [min-2, max+2], which is valid for every f: beyond it the
        second difference vanishes identically.  A custom window is accepted
        only if every point at or outside its edges is convex, which is
        checked exactly here (finitely many candidates can fail).
        """
        if f.is_zero():
            window_lo = -1 if lo is None else lo
            window_hi = 1 if hi is None else hi
            if window_lo >= window_hi:
                raise ValueError("window must contain at least two points")
            n_points = window_hi - window_lo + 1
            return cls(window_lo, window_hi, (Fraction(0),) * n_points, True)
        a, b = f.support_min(), f.support_max()
        if lo is None:
            lo = a - 2
        if hi is None:
            hi = b + 2
        if lo > a - 1 or hi < b + 1:
            raise ValueError("window must cover the support hull with one-point margin")
        for n in list(range(a - 1, lo + 1)) + list(range(hi, b + 2)):
            if central_second_difference(f, n) < 0:
                raise ValueError(f"concave point n={n} at or outside window edge")
        values = tuple(f.value_at(n) for n in range(lo, hi + 1))
        return cls(lo, hi, values, True)

    @classmethod
    def from_profile(cls, p: MaximalProfile) -> "AnalyzedFunction":
        """Analyze a maximal profile on its window [a-1, b+1].

        The profile's tail guarantee is exactly the outside-class certificate:
        beyond the hull the profile is a convex monotone hyperbola envelope
        with vanishing differences.
        """
        if not p.tail_guarantee:
            raise ValueError("profile lacks the tail guarantee")
        return cls(p.window[0], p.window[1], p.values, True)


def classify(g: AnalyzedFunction, n: int) -> str:
    """``plus`` iff g(n+1) + g(n-1) >= 2 g(n); ties are convex."""
    if g.lo + 1 <= n <= g.hi - 1:
        return PLUS if g.second_difference(n) >= 0 else MINUS
    if g.outside_class:
        return PLUS
    raise ValueError(f"n={n} not classifiable without the outside-class guarantee")


# ---------------------------------------------------------------------------
# Boundaries and chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    kind: str
    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start + 1


def boundaries(g: AnalyzedFunction) -> tuple[IndexSet, IndexSet]:
    """(left, right) concave boundaries: concave points with a convex neighbor."""
    left = []
    right = []
    for n in range(g.lo + 1, g.hi):
        if classify(g, n) == MINUS:
            if classify(g, n - 1) == PLUS:
                left.append(n)
            if classify(g, n + 1) == PLUS:
                right.append(n)
    return IndexSet(tuple(left)), IndexSet(tuple(right))


def chains(g: AnalyzedFunction) -> list[Chain]:
    """Maximal runs of same-class points, covering [lo, hi] in order."""
    out: list[Chain] = []
    start = g.lo
    kind = classify(g, g.lo)
    for n in range(g.lo + 1, g.hi + 1):
        k = classify(g, n)
        if k != kind:
            out.append(Chain(kind, start, n - 1))
            start, kind = n, k
    out.append(Chain(kind, start, g.hi))
    return out


def chain_sum_check(g: AnalyzedFunction, chain: Chain) -> tuple[Fraction, Fraction]:
    """(lhs, rhs) of the telescoping identity for a same-class run.

    lhs is the sum of |c2| over the run; rhs collapses it to the four values
    flanking the run, with the sign fixed by the class.  The identity needs
    one stored point beyond each end of the run, so runs touching the window
    edges are rejected.
    """
    if chain.start > chain.end:
        raise ValueError("empty chain")
    if chain.start - 1 < g.lo or chain.end + 1 > g.hi:
        raise ValueError("chain does not have a one-point margin inside the window")
    for n in range(chain.start, chain.end + 1):
        if classify(g, n) != chain.kind:
            raise ValueError(f"point n={n} is not of class {chain.kind!r}")
    lhs = sum((abs(g.second_difference(n))
               for n in range(chain.start, chain.end + 1)), Fraction(0))
    rhs = (g.value_at(chain.start - 1) - g.value_at(chain.start)
           - g.value_at(chain.end) + g.value_at(chain.end + 1))
    if chain.kind == MINUS:
        rhs = -rhs
    return lhs, rhs


# ---------------------------------------------------------------------------
# Exact infinite sums
# ---------------------------------------------------------------------------

def second_norm(g: AnalyzedFunction) -> Fraction:
    """sum over all of Z of |g(n+1) + g(n-1) - 2 g(n)|, exactly.

    Interior terms are summed directly; each infinite tail is one-signed by
    the outside-class guarantee and telescopes to a single difference of
    window values (module docstring).
    """
    interior = sum((abs(g.second_difference(n))
                    for n in range(g.lo + 1, g.hi)), Fraction(0))
    left_tail = g.value_at(g.lo + 1) - g.value_at(g.lo)
    right_tail = g.value_at(g.hi - 1) - g.value_at(g.hi)
    if left_tail < 0 or right_tail < 0:
        raise RuntimeError("outside-class guarantee violated: negative tail sum")
    return interior + left_tail + right_tail


def funeq_rhs(g: AnalyzedFunction) -> Fraction:
    """Concave-boundary upper bound for :func:`second_norm`.

    2 sum_{n in left boundary} (g(n) - g(n-1))
    + 2 sum_{n in right boundary} (g(n) - g(n+1)).  The two limit terms of
    the general bound vanish exactly under the flat-difference guarantee and
    are omitted.  Contract: the result dominates ``second_norm(g)``.
    """
    left, right = boundaries(g)
    total = Fraction(0)
    for n in left:
        total += 2 * (g.value_at(n) - g.value_at(n - 1))
    for n in right:
        total += 2 * (g.value_at(n) - g.value_at(n + 1))
    return total


@dataclass(frozen=True)
class DecompositionReport:
    """Full convexity decomposition of one analyzed window."""

    s_minus: IndexSet
    left_boundary: IndexSet
    right_boundary: IndexSet
    chains: tuple[Chain, ...]
    funeq_rhs_value: Fraction
    second_norm: Fraction


def decompose(g: AnalyzedFunction) -> DecompositionReport:
    minus = tuple(n for n in range(g.lo + 1, g.hi) if classify(g, n) == MINUS)
    left, right = boundaries(g)
    return DecompositionReport(
        s_minus=IndexSet(minus),
        left_boundary=left,
        right_boundary=right,
        chains=tuple(chains(g)),
        funeq_rhs_value=funeq_rhs(g),
        second_norm=second_norm(g),
    )


# ---------------------------------------------------------------------------
# Headline checks on index sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatioRecord:
    """Second-difference norms of one indicator and its maximal function."""

    set: IndexSet
    chi_second_norm: Fraction
    max_second_norm: Fraction
    ratio: Fraction


def _profile_of(a: IndexSet, fast: bool) -> MaximalProfile:
    chi = LatticeFunction.from_set(a)
    return maximal_profile_fast(chi) if fast else maximal_profile(chi)


def theorem1_report(a: IndexSet, fast: bool = False) -> RatioRecord:
    """Norms and ratio for Theorem 1 on one finite nonempty set.

    Contract: ratio <= 3, exactly.
    """
    if not a:
        raise ValueError("Theorem 1 report needs a nonempty set")
    chi = LatticeFunction.from_set(a)
    chi_norm = lp_norm(forward_difference(chi, 2), 1)
    max_norm = second_norm(AnalyzedFunction.from_profile(_profile_of(a, fast)))
    return RatioRecord(a, chi_norm, max_norm, max_norm / chi_norm)


def lemma1_violations(a: IndexSet, fast: bool = False) -> IndexSet:
    """Concave points of the maximal function lying outside the set.

    Contract (Lemma 1): always empty.  The scan window is finite because
    the hyperbola tails force convexity outside the support hull.
    """
    if not a:
        raise ValueError("Lemma 1 check needs a nonempty set")
    g = AnalyzedFunction.from_profile(_profile_of(a, fast))
    bad = tuple(n for n in range(g.lo + 1, g.hi)
                if classify(g, n) == MINUS and n not in a)
    return IndexSet(bad)


def first_derivative_norms(a: IndexSet, fast: bool = False) -> tuple[Fraction, Fraction]:
    """(first-difference l1 norm of the indicator, total variation of its
    maximal function); contract: the second never exceeds the first.

    The variation tails are monotone with limits 0, so they telescope to the
    hull-edge values: total = M(a) + sum_{[a, b)} |D| + M(b).
    """
    if not a:
        raise ValueError("first-derivative norms need a nonempty set")
    chi = LatticeFunction.from_set(a)
    chi_norm = lp_norm(forward_difference(chi, 1), 1)
    p = _profile_of(a, fast)
    lo_hull, hi_hull = p.hull
    variation = sum((abs(p.value_at(n + 1) - p.value_at(n))
                     for n in range(lo_hull, hi_hull)), Fraction(0))
    total = p.value_at(lo_hull) + variation + p.value_at(hi_hull)
    return chi_norm, total
