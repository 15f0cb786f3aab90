"""Hessenberg functions and their derived combinatorics: the natural unit
interval order P(m), its incomparability graph G(m), the digraph D(m),
digraph complementation, and exhaustive enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .base import DEFAULT_MAX_N, check_bound


class HessenbergValidationError(ValueError):
    """Raised with the offending index when m is not a Hessenberg function."""

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset  # frozensets of size 2

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise ValueError(f"bad edge {set(e)}")

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset
    edges: frozenset  # ordered pairs (u, v), u != v

    def __post_init__(self):
        for u, v in self.edges:
            if u == v or u not in self.vertices or v not in self.vertices:
                raise ValueError(f"bad directed edge {(u, v)}")

    def has_edge(self, u, v) -> bool:
        return (u, v) in self.edges


def complement(d: Digraph) -> Digraph:
    edges = frozenset(
        (u, v)
        for u, v in itertools.permutations(sorted(d.vertices), 2)
        if (u, v) not in d.edges
    )
    return Digraph(d.vertices, edges)


@dataclass(frozen=True)
class HessenbergFunction:
    """m = (m_1, ..., m_{n-1}), weakly increasing with i <= m_i <= n.

    The convention m_n = n is implicit and exposed through m_at.
    """

    n: int
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        if self.n < 1 or len(self.m) != self.n - 1:
            raise HessenbergValidationError(
                0, f"need exactly n-1={self.n - 1} values, got {len(self.m)}"
            )
        for i, v in enumerate(self.m, start=1):
            if v < i:
                raise HessenbergValidationError(i, f"m_{i}={v} violates m_i >= i")
            if v > self.n:
                raise HessenbergValidationError(i, f"m_{i}={v} exceeds n={self.n}")
            if i > 1 and v < self.m[i - 2]:
                raise HessenbergValidationError(
                    i, f"m_{i}={v} breaks weak monotonicity"
                )

    def m_at(self, i: int) -> int:
        if i == self.n:
            return self.n
        return self.m[i - 1]

    def __str__(self):
        return "(" + ",".join(map(str, self.m)) + ")"


def new_hessenberg(n: int, m) -> HessenbergFunction:
    return HessenbergFunction(n, tuple(m))


def staircase(n: int) -> HessenbergFunction:
    """The minimal Hessenberg function (1, 2, ..., n-1)."""
    return HessenbergFunction(n, tuple(range(1, n)))


def weight(m: HessenbergFunction) -> int:
    """Sum of m_i - i; equals the edge count of G(m)."""
    return sum(v - i for i, v in enumerate(m.m, start=1))


def enumerate_hessenberg(n: int, max_n: int = DEFAULT_MAX_N, force: bool = False):
    """All Hessenberg functions for n, lexicographically; C_n of them."""
    check_bound(n, max_n, force)

    def rec(i, lo):
        if i == n:
            yield ()
            return
        for v in range(max(i, lo), n + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    return [HessenbergFunction(n, parts) for parts in rec(1, 1)]


def poset_relation(m: HessenbergFunction):
    """P(m): the pairs (i, j) with i < j in the order, i.e. j > m_i."""
    return {
        (i, j)
        for i in range(1, m.n + 1)
        for j in range(m.m_at(i) + 1, m.n + 1)
    }


def incomparability_graph(m: HessenbergFunction) -> Graph:
    edges = frozenset(
        frozenset((i, j))
        for i in range(1, m.n)
        for j in range(i + 1, m.m_at(i) + 1)
    )
    return Graph(frozenset(range(1, m.n + 1)), edges)


def digraph(m: HessenbergFunction) -> Digraph:
    """D(m): edge u -> v iff v precedes u in P(m)."""
    rel = poset_relation(m)
    return Digraph(
        frozenset(range(1, m.n + 1)),
        frozenset((u, v) for v, u in rel),
    )
