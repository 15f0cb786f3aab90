"""The character side of the main identity: class-function values of the
dot action, fixed-space dimensions under Young subgroups, irreducible
multiplicities, and the e-positivity / Schur-positivity reports.

The character is computed from the proven identity (the t^d slice of
omega X_{G(m)}(t) is the Frobenius image), not from a geometric model;
its consistency is pinned by the two independent combinatorial routes
(qsym pipeline vs tableau pipeline) that the verifiers compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .base import Partition, Permutation, TPoly, partitions, z_of
from .betti import c_coeffs, omega_x_of, x_of
from .hessenberg import HessenbergFunction, weight
from .qsym import SymElement, contract_to_m, expand_in_basis, generator, to_m_basis


class IntegralityError(ArithmeticError):
    """A value that is an integer by theorem came out non-integral."""


def _as_int(value, context: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise IntegralityError(f"{context}: non-integral value {value}")
        return int(value)
    return value


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: tuple  # pairs (Partition cycle type, integer), reverse-lex order

    def as_dict(self):
        return dict(self.values)

    def __call__(self, arg) -> int:
        if isinstance(arg, Permutation):
            arg = arg.cycle_type()
        return dict(self.values)[arg]

    def dimension(self) -> int:
        return self(Partition((1,) * self.n))


def dot_character(m: HessenbergFunction, d: int) -> ClassFunction:
    """Character values on cycle types: chi(mu) = z_mu * [p_mu] f, where
    f is the t^d slice of omega X_{G(m)}(t)."""
    if not 0 <= d <= weight(m):
        raise ValueError(f"d={d} outside 0..{weight(m)}")
    f = omega_x_of(m).t_slice(d)
    in_p = expand_in_basis(f, "p")
    values = []
    for mu in partitions(m.n):
        coeff = in_p.coeff(mu).coeff(0)
        values.append((mu, _as_int(z_of(mu) * coeff, f"chi({mu})")))
    return ClassFunction(m.n, tuple(values))


def frobenius_image(chi: ClassFunction) -> SymElement:
    """ch(chi) = sum_mu chi(mu)/z_mu p_mu, returned in the m basis."""
    out = SymElement(chi.n, "m")
    for mu, value in chi.values:
        c = Fraction(value, z_of(mu))
        if c:
            out += to_m_basis(generator("p", mu)).scaled(c)
    return out


def fixed_space_dims(m: HessenbergFunction, d: int):
    """lambda -> c_{d,lambda}(m), the S_lambda-fixed subspace dimensions."""
    if not 0 <= d <= weight(m):
        raise ValueError(f"d={d} outside 0..{weight(m)}")
    cc = c_coeffs(m)
    return {lam: cc.get((d, lam), 0) for lam in partitions(m.n)}


def irreducible_multiplicities(m: HessenbergFunction, d: int):
    """lambda -> coefficient of s_lambda in the t^d slice of omega X."""
    if not 0 <= d <= weight(m):
        raise ValueError(f"d={d} outside 0..{weight(m)}")
    f = omega_x_of(m).t_slice(d)
    in_s = expand_in_basis(f, "s")
    return {
        lam: _as_int(in_s.coeff(lam).coeff(0), f"mult({lam})")
        for lam in partitions(m.n)
    }


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: Partition) -> int:
    """Standard Young tableaux of shape lam, by direct enumeration (kept
    free of the hook length formula so it can serve as an oracle)."""

    def rec(filled_rows):
        total_filled = sum(filled_rows)
        if total_filled == lam.n:
            return 1
        total = 0
        for r, width in enumerate(lam.parts):
            if filled_rows[r] < width and (r == 0 or filled_rows[r] < filled_rows[r - 1]):
                filled_rows[r] += 1
                total += rec(filled_rows)
                filled_rows[r] -= 1
        return total

    return rec([0] * lam.length)


@dataclass(frozen=True)
class PositivityReport:
    subject: str
    checked: int
    violations: tuple  # triples (lambda, d, coefficient)

    @property
    def ok(self) -> bool:
        return not self.violations


def e_positivity_report(m: HessenbergFunction) -> PositivityReport:
    """Expand X_{G(m)}(t) in the e basis per t-degree; collect negatives."""
    in_e = expand_in_basis(x_of(m), "e")
    checked = 0
    bad = []
    for lam, poly in sorted(in_e.terms.items(), key=lambda kv: kv[0].parts, reverse=True):
        for d in poly.exponents():
            c = _as_int(poly.coeff(d), f"e-coefficient at {lam}, t^{d}")
            checked += 1
            if c < 0:
                bad.append((lam, d, c))
    return PositivityReport(f"e-expansion of X_G(m={m})", checked, tuple(bad))


def schur_positivity_report(m: HessenbergFunction) -> PositivityReport:
    """Schur multiplicities of omega X_{G(m)}(t), all t-degrees."""
    checked = 0
    bad = []
    for d in range(weight(m) + 1):
        for lam, mult in irreducible_multiplicities(m, d).items():
            checked += 1
            if mult < 0:
                bad.append((lam, d, mult))
    return PositivityReport(f"Schur expansion of omega X_G(m={m})", checked, tuple(bad))
