"""Exact evaluation of the discrete noncentered maximal operator.

For f: Z -> Q with finite support, M f(n) is the supremum of the averages of
|f| over all windows [n-r, n+s] containing n.  Every value the library needs
comes from a finite enumeration justified by a dilution argument:

* extending a window past the support hull [a, b] keeps the numerator fixed
  and grows the denominator, so it never increases a positive average;
* hence for a <= n <= b the sup is attained by a window inside [a, b], and
  for n > b by a window [i, n] with i in [a, b] (mirror image on the left).

The one-sided form gives the right-tail identity, used for all infinite-sum
bookkeeping downstream: for n >= b,

    M f(n) = max_{i in [a, b]}  S_i / (n - i + 1),   S_i = sum_{j >= i} |f(j)|.

Each candidate is a positive multiple of 1/(n - i + 1), convex and strictly
decreasing in n with differences tending to zero; a finite maximum of such
hyperbolas inherits convexity, monotonicity, and the vanishing tail.  The
mirror statement holds on (-inf, a].  This is the ``tail_guarantee`` carried
by :class:`MaximalProfile`.

Internally all comparisons clear denominators and run on integers; results
are returned as `Fraction` in lowest terms, so the naive and the fast path
are bit-identical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator

from .lattice import LatticeFunction

__all__ = [
    "average",
    "maximal_at",
    "MaximalProfile",
    "maximal_profile",
    "maximal_profile_fast",
]


def average(f: LatticeFunction, n: int, r: int, s: int) -> Fraction:
    """Average of |f| over the window [n-r, n+s], exactly."""
    if r < 0 or s < 0:
        raise ValueError("window radii r, s must be nonnegative")
    total = sum((abs(f.value_at(n + j)) for j in range(-r, s + 1)), Fraction(0))
    return total / (r + s + 1)


def _cleared(f: LatticeFunction) -> tuple[int, list[int]]:
    """(common denominator c, integer values of c*|f| on the support block)."""
    c = 1
    for v in f.values:
        c = lcm(c, v.denominator)
    return c, [abs(v.numerator) * (c // v.denominator) for v in f.values]


def maximal_at(f: LatticeFunction, n: int) -> Fraction:
    """Sup of window averages of |f| at n; 0 for the zero function.

    Enumerates exactly the windows that can attain the sup (see the module
    docstring for the dilution argument).
    """
    if f.is_zero():
        return Fraction(0)
    a = f.support_min()
    b = f.support_max()
    c, u = _cleared(f)
    w = len(u)
    prefix = [0] * (w + 1)
    for i, v in enumerate(u):
        prefix[i + 1] = prefix[i] + v

    best_num, best_den = 0, 1
    if n < a:
        for j in range(a, b + 1):          # windows [n, j]
            num = prefix[j - a + 1]
            den = j - n + 1
            if num * best_den > best_num * den:
                best_num, best_den = num, den
    elif n > b:
        for i in range(a, b + 1):          # windows [i, n]
            num = prefix[w] - prefix[i - a]
            den = n - i + 1
            if num * best_den > best_num * den:
                best_num, best_den = num, den
    else:
        for i in range(a, n + 1):          # windows [i, j] inside the hull
            pi = prefix[i - a]
            for j in range(n, b + 1):
                num = prefix[j - a + 1] - pi
                den = j - i + 1
                if num * best_den > best_num * den:
                    best_num, best_den = num, den
    return Fraction(best_num, best_den * c)


@dataclass(frozen=True)
class MaximalProfile:
    """Exact values of M f on the window [a-1, b+1] around the support hull.

    ``tail_guarantee`` asserts that outside the hull M f is a finite maximum
    of one-sided hyperbolas: convex and monotone on (-inf, a] and on [b, inf)
    with consecutive differences tending to 0 (derivation in the module
    docstring).  Together with the stored window this pins every quantity an
    infinite second-difference or variation sum needs.
    """

    source: LatticeFunction
    hull: tuple[int, int]
    window: tuple[int, int]
    values: tuple[Fraction, ...]
    tail_guarantee: bool

    def value_at(self, n: int) -> Fraction:
        lo, hi = self.window
        if not lo <= n <= hi:
            raise ValueError(f"n={n} outside profile window [{lo}, {hi}]")
        return self.values[n - lo]

    def points(self) -> Iterator[tuple[int, Fraction]]:
        lo = self.window[0]
        for i, v in enumerate(self.values):
            yield lo + i, v


def maximal_profile(f: LatticeFunction) -> MaximalProfile:
    """Profile by direct per-point enumeration: the permanent oracle path."""
    if f.is_zero():
        raise ValueError("maximal profile of the zero function is undefined")
    a = f.support_min()
    b = f.support_max()
    values = tuple(maximal_at(f, n) for n in range(a - 1, b + 2))
    return MaximalProfile(f, (a, b), (a - 1, b + 1), values, True)


def maximal_profile_fast(f: LatticeFunction) -> MaximalProfile:
    """Bit-identical to :func:`maximal_profile`, by maximum-density segments.

    Over prefix sums P of the (denominator-cleared) |f| padded with one zero
    on each side, M f at position t is the max slope (P_j - P_i)/(j - i) over
    i <= t < j.  Grouping candidate segments by length d and taking a sliding
    maximum of the length-d window sums with a monotone deque costs O(1)
    amortized per (t, d) pair: O(m^2) in total for window width m, against
    the cubic cost of enumerating every window at every point.
    """
    if f.is_zero():
        raise ValueError("maximal profile of the zero function is undefined")
    a = f.support_min()
    b = f.support_max()
    c, u = _cleared(f)
    padded = [0] + u + [0]                  # positions a-1 .. b+1
    m = len(padded)
    prefix = [0] * (m + 1)
    for i, v in enumerate(padded):
        prefix[i + 1] = prefix[i] + v

    best_num = [0] * m
    best_den = [1] * m
    for d in range(1, m + 1):
        last_start = m - d
        dq: deque[tuple[int, int]] = deque()    # (start index, window sum), sums decreasing
        for t in range(m):
            if t <= last_start:
                s = prefix[t + d] - prefix[t]
                while dq and dq[-1][1] <= s:
                    dq.pop()
                dq.append((t, s))
            while dq[0][0] < t - d + 1:
                dq.popleft()
            s = dq[0][1]
            if s * best_den[t] > best_num[t] * d:
                best_num[t], best_den[t] = s, d

    values = tuple(Fraction(bn, bd * c) for bn, bd in zip(best_num, best_den))
    return MaximalProfile(f, (a, b), (a - 1, b + 1), values, True)
