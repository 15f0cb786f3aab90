"""Exact primitives: Laurent polynomials in t, compositions with their bar
calculus, integer partitions, and permutations with cycle types.

All values are immutable after construction and all arithmetic is exact
(arbitrary-precision integers; fractions appear only transiently inside
basis solves).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial


class DegreeMismatchError(ValueError):
    """Two objects of different degree n were combined."""


class BoundExceededError(ValueError):
    """An enumeration exceeded the configured size guard."""


DEFAULT_MAX_N = 8


def check_bound(n: int, max_n: int = DEFAULT_MAX_N, force: bool = False) -> None:
    if not force and n > max_n:
        raise BoundExceededError(
            f"size {n} exceeds the enumeration guard ({max_n}); "
            f"pass force=True (or --force) to override"
        )


class TPoly:
    """Laurent polynomial in one variable t with exact coefficients.

    ``terms`` maps integer exponents (possibly negative) to nonzero
    coefficients.  Coefficients are ints, or Fractions while a linear
    solve is in flight.  Zero coefficients are never stored, so equality
    is term-map equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                s = clean.get(e, 0) + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({0: c}) if c else cls()

    @classmethod
    def t(cls, exp=1, coeff=1):
        return cls({exp: coeff}) if coeff else cls()

    def coeff(self, exp):
        return self.terms.get(exp, 0)

    def exponents(self):
        return sorted(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _coerced(self, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TPoly.const(other)
        return None

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = TPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = TPoly()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TPoly()
            res = TPoly()
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if not isinstance(other, TPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = TPoly()
        res.terms = out
        return res

    __rmul__ = __mul__

    def shifted(self, k: int) -> "TPoly":
        res = TPoly()
        res.terms = {e + k: c for e, c in self.terms.items()}
        return res

    def reciprocal(self) -> "TPoly":
        """The substitution t -> 1/t."""
        res = TPoly()
        res.terms = {-e: c for e, c in self.terms.items()}
        return res

    def evaluate(self, x):
        return sum(c * x**e for e, c in self.terms.items())

    def is_integral(self) -> bool:
        return all(
            not isinstance(c, Fraction) or c.denominator == 1
            for c in self.terms.values()
        )

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in self.exponents():
            c = self.terms[e]
            if e == 0:
                pieces.append(str(c))
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    pieces.append(tpow)
                elif c == -1:
                    pieces.append(f"-{tpow}")
                else:
                    pieces.append(f"{c}*{tpow}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"TPoly({self.terms!r})"


T_ZERO = TPoly()
T_ONE = TPoly.const(1)


@dataclass(frozen=True)
class Composition:
    """A sequence of positive parts; the empty composition has degree 0.

    The bar-set view puts vertical bars in a subset of the n-1 gaps of a
    row of n objects; parts are the gap widths.  ``num_bars`` is the
    paper-style size statistic (number of bars, i.e. length - 1).
    """

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def num_bars(self) -> int:
        return max(len(self.parts) - 1, 0)

    def bars(self) -> frozenset:
        acc, out = 0, []
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    @staticmethod
    def from_bars(n: int, bars) -> "Composition":
        if n == 0:
            return Composition(())
        cuts = sorted(bars)
        if any(b < 1 or b > n - 1 for b in cuts):
            raise ValueError(f"bars must lie in 1..{n - 1}: {cuts}")
        prev, parts = 0, []
        for b in cuts + [n]:
            parts.append(b - prev)
            prev = b
        return Composition(tuple(parts))

    def complement(self) -> "Composition":
        all_bars = set(range(1, self.n))
        return Composition.from_bars(self.n, all_bars - self.bars())

    def bar_union(self, other: "Composition") -> "Composition":
        if self.n != other.n:
            raise DegreeMismatchError(f"degrees differ: {self.n} vs {other.n}")
        return Composition.from_bars(self.n, self.bars() | other.bars())

    def refines(self, other: "Composition") -> bool:
        """The paper's coarse-to-fine order: true iff our bars are a subset."""
        if self.n != other.n:
            raise DegreeMismatchError(f"degrees differ: {self.n} vs {other.n}")
        return self.bars() <= other.bars()

    def sorted_partition(self) -> "Partition":
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive parts."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"partition parts must be positive integers: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def as_composition(self) -> Composition:
        return Composition(self.parts)

    def reversed_composition(self) -> Composition:
        return Composition(self.parts[::-1])

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def compositions(n: int):
    """All compositions of n in lexicographic order of part sequences."""
    if n == 0:
        yield Composition(())
        return

    def rec(k):
        if k == 0:
            yield ()
            return
        for first in range(1, k + 1):
            for rest in rec(k - first):
                yield (first,) + rest

    for parts in rec(n):
        yield Composition(parts)


def partitions(n: int, max_part: int = None):
    """All partitions of n in reverse lexicographic (descending) order."""
    if n == 0:
        yield Partition(())
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def rearrangements(lam: Partition):
    """Distinct compositions whose parts are a permutation of lam's parts."""
    seen = sorted(set(itertools.permutations(lam.parts)))
    return [Composition(p) for p in seen]


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def cycle_type(self) -> Partition:
        seen = set()
        sizes = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            size, cur = 0, start
            while cur not in seen:
                seen.add(cur)
                cur = self.images[cur - 1]
                size += 1
            sizes.append(size)
        return Partition(tuple(sorted(sizes, reverse=True)))


def z_of(lam: Partition) -> int:
    """Centralizer order: product over part sizes k of k^c_k * c_k!."""
    out = 1
    for k in set(lam.parts):
        c = lam.parts.count(k)
        out *= k**c * factorial(c)
    return out


def is_palindromic(q: TPoly, center: int = 0) -> bool:
    """True iff q * t^(-center) is fixed under t -> 1/t."""
    return all(q.coeff(2 * center - e) == c for e, c in q.terms.items())
