"""Finitely supported exact-rational functions on the integer lattice.

Scalars are `fractions.Fraction` throughout: arbitrary-precision, always in
lowest terms, with exact comparisons.  No floating point enters any norm or
sign decision.  Functions are stored as a contiguous block of values together
with the index of the first stored value; the first and last stored values
are kept nonzero, so equality of values is equality of functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]

__all__ = [
    "IndexSet",
    "LatticeFunction",
    "forward_difference",
    "central_second_difference",
    "lp_norm",
    "block_count",
]


# ---------------------------------------------------------------------------
# Finite sets of integers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IndexSet:
    """A finite set of integers, kept as a strictly increasing tuple.

    The equivalent bitmask form (``base``, ``bits``) is exposed for the
    enumeration harness: bit ``i`` of ``bits`` is set iff ``base + i`` is an
    element.  Python integers act as the unbounded word sequence.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        for x, y in zip(self.elements, self.elements[1:]):
            if x >= y:
                raise ValueError("elements must be strictly increasing")

    @classmethod
    def from_iterable(cls, items: Iterable[int]) -> "IndexSet":
        return cls(tuple(sorted(set(int(x) for x in items))))

    @classmethod
    def from_mask(cls, bits: int, base: int = 0) -> "IndexSet":
        if bits < 0:
            raise ValueError("bitmask must be nonnegative")
        out = []
        i = 0
        while bits:
            if bits & 1:
                out.append(base + i)
            bits >>= 1
            i += 1
        return cls(tuple(out))

    @property
    def base(self) -> int:
        return self.elements[0] if self.elements else 0

    @property
    def bits(self) -> int:
        b = self.base
        mask = 0
        for x in self.elements:
            mask |= 1 << (x - b)
        return mask

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, n: object) -> bool:
        return n in set(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no minimum")
        return self.elements[0]

    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]

    def translate(self, t: int) -> "IndexSet":
        return IndexSet(tuple(x + t for x in self.elements))

    def reflect(self) -> "IndexSet":
        return IndexSet(tuple(-x for x in reversed(self.elements)))


def block_count(a: IndexSet) -> int:
    """Number of maximal runs of consecutive integers in ``a``."""
    blocks = 0
    prev = None
    for x in a:
        if prev is None or x != prev + 1:
            blocks += 1
        prev = x
    return blocks


# ---------------------------------------------------------------------------
# Lattice functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeFunction:
    """f: Z -> Q with finite support, zero outside the stored block.

    ``values[i]`` is f(offset + i).  Canonical form: if any value is nonzero,
    the first and the last stored values are nonzero; the zero function is
    stored as ``offset=0, values=()``.  Construct through :meth:`make` (or
    :meth:`from_set`), which trims and coerces; the raw constructor trusts
    its caller.
    """

    offset: int
    values: tuple[Fraction, ...]

    @classmethod
    def make(cls, offset: int, values: Iterable[Scalar]) -> "LatticeFunction":
        vals = [Fraction(v) for v in values]
        lo = 0
        hi = len(vals)
        while lo < hi and vals[lo] == 0:
            lo += 1
        while hi > lo and vals[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return cls(0, ())
        return cls(offset + lo, tuple(vals[lo:hi]))

    @classmethod
    def from_set(cls, a: IndexSet) -> "LatticeFunction":
        """Characteristic function of ``a`` (the zero function for empty ``a``)."""
        if not a:
            return cls(0, ())
        lo, hi = a.min(), a.max()
        vals = [0] * (hi - lo + 1)
        for x in a:
            vals[x - lo] = 1
        return cls.make(lo, vals)

    def is_zero(self) -> bool:
        return not self.values

    def value_at(self, n: int) -> Fraction:
        i = n - self.offset
        if 0 <= i < len(self.values):
            return self.values[i]
        return Fraction(0)

    def support_min(self) -> int:
        if self.is_zero():
            raise ValueError("zero function has no support")
        return self.offset

    def support_max(self) -> int:
        if self.is_zero():
            raise ValueError("zero function has no support")
        return self.offset + len(self.values) - 1

    def support(self) -> IndexSet:
        return IndexSet(tuple(self.offset + i
                              for i, v in enumerate(self.values) if v != 0))

    def __abs__(self) -> "LatticeFunction":
        return LatticeFunction(self.offset, tuple(abs(v) for v in self.values))

    def scale(self, c: Scalar) -> "LatticeFunction":
        c = Fraction(c)
        if c == 0:
            return LatticeFunction(0, ())
        return LatticeFunction(self.offset, tuple(c * v for v in self.values))


# ---------------------------------------------------------------------------
# Discrete derivatives and norms
# ---------------------------------------------------------------------------

def forward_difference(f: LatticeFunction, k: int = 1) -> LatticeFunction:
    """k-th forward difference; for k=1, g(n) = f(n+1) - f(n).

    Higher orders are the k-fold iterate, so g = sum_j C(k,j)(-1)^(k-j) f(.+j).
    k = 0 is rejected: the identity map is not a derivative.
    """
    if k < 1:
        raise ValueError("difference order k must be >= 1")
    g = f
    for _ in range(k):
        if g.is_zero():
            return g
        vals = [Fraction(0)] * (len(g.values) + 1)
        for i, v in enumerate(g.values):
            vals[i] += v        # g(n+1) term, at n = offset - 1 + i
            vals[i + 1] -= v    # -g(n) term
        g = LatticeFunction.make(g.offset - 1, vals)
    return g


def central_second_difference(f: LatticeFunction, n: int) -> Fraction:
    """f(n+1) + f(n-1) - 2 f(n), the centered form of the second difference."""
    return f.value_at(n + 1) + f.value_at(n - 1) - 2 * f.value_at(n)


def lp_norm(f: LatticeFunction, p) -> Fraction:
    """l^p norm of ``f``.

    p = 1 and p = infinity are exact (Fraction).  Any other positive p is
    returned as a 50-digit mpmath approximation: those values are inherently
    irrational and must never feed an exact comparison.
    """
    if p == math.inf:
        return max((abs(v) for v in f.values), default=Fraction(0))
    p = Fraction(p)
    if p <= 0:
        raise ValueError("norm exponent p must be positive")
    if p == 1:
        return sum((abs(v) for v in f.values), Fraction(0))
    import mpmath

    with mpmath.workdps(50):
        exponent = mpmath.mpf(p.numerator) / p.denominator
        total = mpmath.mpf(0)
        for v in f.values:
            av = abs(v)
            total += mpmath.power(mpmath.mpf(av.numerator) / av.denominator, exponent)
        return mpmath.power(total, 1 / exponent)
