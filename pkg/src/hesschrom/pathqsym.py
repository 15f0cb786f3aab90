"""The path quasisymmetric function Xi_D(x,t) over ordered path covers of
a digraph, the reciprocity identity omega Xi_D = Xi_{D-complement} as an
executable check, and path-cover counts for the coefficients c_{d,lambda}."""

from __future__ import annotations

from dataclasses import dataclass

from .base import Composition, DEFAULT_MAX_N, TPoly, check_bound
from .hessenberg import Digraph, HessenbergFunction, complement, digraph
from .qsym import QSymElement, omega


@dataclass(frozen=True)
class OrderedPathCover:
    """A sequencing q of V(D) cut by a composition beta into consecutive
    directed paths of D."""

    q: tuple
    beta: Composition


def _paths_from(v, remaining, d: Digraph):
    """Directed paths in d starting at v using only ``remaining`` vertices."""
    yield (v,)
    rest = remaining - {v}
    for w in sorted(rest):
        if d.has_edge(v, w):
            for tail in _paths_from(w, rest, d):
                yield (v,) + tail


def _covers(remaining, d: Digraph):
    """Sequences of vertex-disjoint directed paths covering ``remaining``."""
    if not remaining:
        yield ()
        return
    for start in sorted(remaining):
        for path in _paths_from(start, remaining, d):
            for tail in _covers(remaining - set(path), d):
                yield (path,) + tail


def ordered_path_covers(
    d: Digraph, max_n: int = DEFAULT_MAX_N, force: bool = False
):
    """All ordered path covers of d, deterministic order."""
    check_bound(len(d.vertices), max_n, force)
    out = []
    for paths in _covers(frozenset(d.vertices), d):
        q = tuple(v for path in paths for v in path)
        beta = Composition(tuple(len(p) for p in paths))
        out.append(OrderedPathCover(q, beta))
    return out


def cover_paths(cover: OrderedPathCover):
    """The cover's paths, recovered from the sequencing and composition."""
    out, pos = [], 0
    for part in cover.beta.parts:
        out.append(cover.q[pos : pos + part])
        pos += part
    return out


def _neutral_pairs(d: Digraph):
    """Pairs {u,v}, u<v, with both directed edges present or neither."""
    vs = sorted(d.vertices)
    return [
        (u, v)
        for i, u in enumerate(vs)
        for v in vs[i + 1 :]
        if d.has_edge(u, v) == d.has_edge(v, u)
    ]


def sequencing_stat(q: tuple, d: Digraph, stat: str = "asc") -> int:
    """asc q: neutral pairs u<v with v later in q; des q swaps u and v."""
    position = {v: i for i, v in enumerate(q)}
    count = 0
    for u, v in _neutral_pairs(d):
        if stat == "asc":
            count += position[v] > position[u]
        else:
            count += position[u] > position[v]
    return count


def path_qsym(
    d: Digraph, stat: str = "asc", max_n: int = DEFAULT_MAX_N, force: bool = False
) -> QSymElement:
    """Xi_D(x,t) in the M basis."""
    if stat not in ("asc", "des"):
        raise ValueError(f"stat must be 'asc' or 'des': {stat!r}")
    out = QSymElement(len(d.vertices), "M")
    for cover in ordered_path_covers(d, max_n, force):
        out += QSymElement.monomial(
            cover.beta, "M", TPoly.t(sequencing_stat(cover.q, d, stat))
        )
    return out


@dataclass(frozen=True)
class ReciprocityResult:
    equal: bool
    witness: tuple  # (composition, t-exponent) of first discrepancy, or None


def verify_reciprocity(
    d: Digraph, max_n: int = DEFAULT_MAX_N, force: bool = False
) -> ReciprocityResult:
    """Compare omega(Xi_D) with Xi of the complement digraph."""
    lhs = omega(path_qsym(d, "asc", max_n, force))
    rhs = path_qsym(complement(d), "asc", max_n, force)
    if lhs == rhs:
        return ReciprocityResult(True, None)
    for alpha in sorted(set(lhs.terms) | set(rhs.terms), key=lambda a: a.parts):
        diff = lhs.coeff(alpha) - rhs.coeff(alpha)
        if diff:
            return ReciprocityResult(False, (alpha, min(diff.exponents())))
    return ReciprocityResult(True, None)  # unreachable


def covers_with_composition(
    d: Digraph, alpha: Composition, max_n: int = DEFAULT_MAX_N, force: bool = False
):
    """Ordered path covers of d whose composition is exactly alpha."""
    check_bound(len(d.vertices), max_n, force)
    if alpha.n != len(d.vertices):
        raise ValueError(f"{alpha} is not a composition of {len(d.vertices)}")
    out = []

    def rec(i, remaining, prefix):
        if i == alpha.length:
            out.append(OrderedPathCover(tuple(prefix), alpha))
            return
        want = alpha.parts[i]
        for start in sorted(remaining):
            for path in _paths_from(start, remaining, d):
                if len(path) == want:
                    rec(i + 1, remaining - set(path), prefix + list(path))

    rec(0, frozenset(d.vertices), [])
    return out


def c_via_path_covers(
    m: HessenbergFunction,
    alpha: Composition,
    stat: str = "asc",
    max_n: int = DEFAULT_MAX_N,
    force: bool = False,
):
    """d -> number of ordered path covers (q, alpha) of the complement of
    D(m) with the chosen statistic equal to d."""
    dbar = complement(digraph(m))
    counts = {}
    for cover in covers_with_composition(dbar, alpha, max_n, force):
        d = sequencing_stat(cover.q, dbar, stat)
        counts[d] = counts.get(d, 0) + 1
    return counts
