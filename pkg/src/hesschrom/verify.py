"""Brute-force verification suites for the library's identities.

Each suite runner returns a Report; a suite passes iff its failure list
is empty.  These are the same routines the CLI's ``verify`` subcommand
and the acceptance tests drive.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .base import Composition, Partition, TPoly, compositions, partitions
from .betti import (
    admissible_tableaux,
    betti_vector,
    cell_dimension,
    sw_inversions_of_cover,
    sw_to_t_bijection,
    t_inversions_of_cover,
    unified_dimension,
    verify_sw_betti,
    x_of,
)
from .character import (
    dot_character,
    e_positivity_report,
    frobenius_image,
    omega_x_of,
    schur_positivity_report,
)
from .chromatic import chromatic_qsym
from .hessenberg import (
    Digraph,
    HessenbergFunction,
    complement,
    digraph,
    enumerate_hessenberg,
    incomparability_graph,
    weight,
)
from .pathqsym import ordered_path_covers, path_qsym, verify_reciprocity
from .qsym import (
    QSymElement,
    f_to_m,
    generator,
    is_symmetric,
    omega,
)


@dataclass
class Report:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, input_desc: str, expected, actual):
        self.failures.append(
            {"input": input_desc, "expected": str(expected), "actual": str(actual)}
        )

    def to_json(self):
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.monotonic()
        report = fn(*args, **kwargs)
        report.elapsed_ms = int((time.monotonic() - start) * 1000)
        return report

    return wrapper


def _all_hessenberg(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_hessenberg(n, max_n=max_n, force=True)


def random_digraph(rng: random.Random, max_vertices: int = 5) -> Digraph:
    nv = rng.randint(1, max_vertices)
    vs = frozenset(range(1, nv + 1))
    edges = frozenset(
        (u, v)
        for u, v in itertools.permutations(sorted(vs), 2)
        if rng.random() < 0.5
    )
    return Digraph(vs, edges)


@_timed
def suite_reciprocity(max_n: int = 5, seed: int = 0, random_count: int = 200) -> Report:
    """omega Xi_D = Xi of the complement, on D(m) and random digraphs."""
    report = Report("reciprocity")
    for m in _all_hessenberg(max_n):
        result = verify_reciprocity(digraph(m), force=True)
        report.checked += 1
        if not result.equal:
            report.record(f"D(m) for m={m}", "equal", f"differs at {result.witness}")
    rng = random.Random(seed)
    for i in range(random_count):
        d = random_digraph(rng)
        result = verify_reciprocity(d, force=True)
        report.checked += 1
        if not result.equal:
            report.record(
                f"random digraph #{i} (seed {seed}): {sorted(d.edges)}",
                "equal",
                f"differs at {result.witness}",
            )
    return report


@_timed
def suite_symmetry(max_n: int = 6) -> Report:
    """X_{G(m)}(t) is a symmetric function for every Hessenberg m."""
    report = Report("symmetry")
    for m in _all_hessenberg(max_n):
        x = chromatic_qsym(incomparability_graph(m), "asc", force=True)
        report.checked += 1
        if not is_symmetric(x):
            report.record(f"m={m}", "symmetric", "not symmetric")
    return report


@_timed
def suite_sw(max_n: int = 6) -> Report:
    """Tableau Betti numbers equal the omega-qsym coefficients c_{d,lambda}."""
    report = Report("sw")
    for m in _all_hessenberg(max_n):
        result = verify_sw_betti(m, force=True)
        report.checked += result.checked
        if not result.ok:
            lam, d, lhs, rhs = result.first_discrepancy
            report.record(
                f"m={m}, lambda={lam}, d={d}", f"c={rhs}", f"beta_2d={lhs}"
            )
    return report


@_timed
def suite_unified(max_n: int = 6) -> Report:
    """Tymoczko's two-case dimension equals the unified reading-order count."""
    report = Report("unified")
    for m in _all_hessenberg(max_n):
        for lam in partitions(m.n):
            for t in admissible_tableaux(m, lam, force=True):
                report.checked += 1
                a, b = cell_dimension(t, m), unified_dimension(t, m)
                if a != b:
                    report.record(f"m={m}, T={t.rows}", a, b)
    return report


@_timed
def suite_bijection(max_n: int = 5) -> Report:
    """The SW-to-T scan is a bijection for every ordered path cover."""
    report = Report("bijection")
    for m in _all_hessenberg(max_n):
        dbar = complement(digraph(m))
        for cover in ordered_path_covers(dbar, force=True):
            report.checked += 1
            sw = sw_inversions_of_cover(cover, m)
            tv = t_inversions_of_cover(cover, m)
            mapping = sw_to_t_bijection(cover, m)
            image = set(mapping.values())
            if (
                set(mapping) != sw
                or len(image) != len(mapping)
                or image != tv
            ):
                report.record(
                    f"m={m}, cover q={cover.q}, beta={cover.beta}",
                    f"bijection onto {sorted(tv)}",
                    f"map {mapping}",
                )
    return report


@_timed
def suite_palindromic(max_n: int = 6) -> Report:
    """Laurent palindromicity of the Betti generating function, and the
    coefficient identity X(t) = t^{|m|} X(1/t)."""
    report = Report("palindromic")
    for m in _all_hessenberg(max_n):
        w = weight(m)
        for lam in partitions(m.n):
            bv = betti_vector(m, lam, force=True)
            q = bv.poincare().shifted(-w)
            report.checked += 1
            if q != q.reciprocal():
                report.record(f"m={m}, lambda={lam}", "palindromic", str(q))
        x = x_of(m)
        for lam, poly in x.terms.items():
            report.checked += 1
            if poly != poly.reciprocal().shifted(w):
                report.record(
                    f"m={m}, coefficient of m_{lam}",
                    "t^|m|-palindromic",
                    str(poly),
                )
    return report


@_timed
def suite_epos(max_n: int = 6) -> Report:
    """e-positivity scan of X_{G(m)}(t) (conjecture-scale evidence only)."""
    report = Report("epos")
    for m in _all_hessenberg(max_n):
        sub = e_positivity_report(m)
        report.checked += sub.checked
        for lam, d, c in sub.violations:
            report.record(f"m={m}, lambda={lam}, t^{d}", ">= 0", c)
    return report


@_timed
def suite_schur(max_n: int = 6) -> Report:
    """Nonnegativity of Schur multiplicities of omega X_{G(m)}(t)."""
    report = Report("schur")
    for m in _all_hessenberg(max_n):
        sub = schur_positivity_report(m)
        report.checked += sub.checked
        for lam, d, c in sub.violations:
            report.record(f"m={m}, lambda={lam}, t^{d}", ">= 0", c)
    return report


@_timed
def suite_omega(max_degree: int = 8) -> Report:
    """Calibration of the involution: omega^2 = id, omega F_a = F_{a-bar},
    omega e = h, omega p_k = (-1)^(k-1) p_k."""
    report = Report("omega")
    for n in range(1, max_degree + 1):
        for alpha in compositions(n):
            m_alpha = QSymElement.monomial(alpha, "M")
            report.checked += 1
            if omega(omega(m_alpha)) != m_alpha:
                report.record(f"omega^2 on M_{alpha}", m_alpha, omega(omega(m_alpha)))
            f_alpha = f_to_m(QSymElement.monomial(alpha, "F"))
            f_comp = f_to_m(QSymElement.monomial(alpha.complement(), "F"))
            report.checked += 1
            if omega(f_alpha) != f_comp:
                report.record(f"omega on F_{alpha}", f"F_{alpha.complement()}", "differs")
        for lam in partitions(n):
            report.checked += 1
            if omega(generator("e", lam)) != generator("h", lam):
                report.record(f"omega e_{lam}", f"h_{lam}", "differs")
        pk = generator("p", Partition((n,)))
        report.checked += 1
        if omega(pk) != pk.scaled((-1) ** (n - 1)):
            report.record(f"omega p_{n}", f"(-1)^{n - 1} p_{n}", "differs")
    return report


@_timed
def suite_character(max_n: int = 6) -> Report:
    """Integrality, Frobenius reconstruction, and the dimension identity
    chi(1^n) = beta_{2d}(m, (1^n))."""
    report = Report("character")
    for m in _all_hessenberg(max_n):
        wx = omega_x_of(m)
        column = Partition((1,) * m.n)
        bv = betti_vector(m, column, force=True).as_dict()
        for d in range(weight(m) + 1):
            chi = dot_character(m, d)  # raises IntegralityError on failure
            report.checked += 1
            if frobenius_image(chi) != wx.t_slice(d):
                report.record(f"m={m}, d={d}", "ch(chi) = slice of omega X", "differs")
            report.checked += 1
            if chi.dimension() != bv.get(2 * d, 0):
                report.record(
                    f"m={m}, d={d}",
                    f"chi(1^n) = {bv.get(2 * d, 0)}",
                    chi.dimension(),
                )
    return report


@_timed
def suite_points(max_n: int = 6) -> Report:
    """The staircase m gives n! points; column shapes always total n!."""
    import math

    report = Report("points")
    for n in range(1, max_n + 1):
        column = Partition((1,) * n)
        for m in enumerate_hessenberg(n, force=True):
            bv = betti_vector(m, column, force=True)
            report.checked += 1
            if bv.total() != math.factorial(n):
                report.record(f"m={m}", math.factorial(n), bv.total())
            if weight(m) == 0:
                report.checked += 1
                if bv.as_dict() != {0: math.factorial(n)}:
                    report.record(
                        f"staircase m={m}", {0: math.factorial(n)}, bv.as_dict()
                    )
    return report


SUITES = {
    "reciprocity": suite_reciprocity,
    "symmetry": suite_symmetry,
    "sw": suite_sw,
    "unified": suite_unified,
    "bijection": suite_bijection,
    "palindromic": suite_palindromic,
    "epos": suite_epos,
    "schur": suite_schur,
    "omega": suite_omega,
    "character": suite_character,
    "points": suite_points,
}
