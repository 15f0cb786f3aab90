import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hesschrom.base import Composition, Partition, TPoly, compositions, partitions
from hesschrom.qsym import (
    NotSymmetricError,
    QSymElement,
    SymElement,
    contract_to_m,
    expand_in_basis,
    f_to_m,
    generator,
    is_symmetric,
    kostka,
    m_to_f,
    omega,
    quasi_shuffle,
    to_m_basis,
)


def M(*parts):
    return QSymElement.monomial(Composition(parts), "M")


def F(*parts):
    return QSymElement.monomial(Composition(parts), "F")


def expand_series(x: QSymElement, nvars: int):
    """Independent oracle: expand an M-basis element as a power series in
    nvars variables; returns exponent-tuple -> TPoly."""
    out = {}
    for alpha, c in x.terms.items():
        for idxs in itertools.combinations(range(nvars), alpha.length):
            expo = [0] * nvars
            for i, p in zip(idxs, alpha.parts):
                expo[i] = p
            key = tuple(expo)
            out[key] = out.get(key, TPoly()) + c
    return {k: v for k, v in out.items() if v}


def series_product(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, TPoly()) + c1 * c2
    return {k: v for k, v in out.items() if v}


class TestBasisChange:
    def test_f_to_m_examples(self):
        assert f_to_m(F(2)) == M(2) + M(1, 1)
        assert f_to_m(F(1, 1)) == M(1, 1)
        assert f_to_m(F(3)) == M(3) + M(1, 2) + M(2, 1) + M(1, 1, 1)

    def test_m_to_f_examples(self):
        assert m_to_f(M(1, 1)) == F(1, 1)
        assert m_to_f(M(2)) == F(2) - F(1, 1)
        assert m_to_f(f_to_m(F(2, 1))) == F(2, 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_mutually_inverse(self, n):
        for alpha in compositions(n):
            fa = QSymElement.monomial(alpha, "F")
            assert m_to_f(f_to_m(fa)) == fa
            ma = QSymElement.monomial(alpha, "M")
            assert f_to_m(m_to_f(ma)) == ma


class TestOmega:
    def test_omega_f_example(self):
        assert omega(F(2)) == f_to_m(F(1, 1))

    def test_omega_m11_via_e2_h2(self):
        # oracle: omega e_2 = h_2 with e_2 = M_(1,1), h_2 = M_(2) + M_(1,1)
        assert omega(M(1, 1)) == M(2) + M(1, 1)

    def test_degree_one_fixed_point(self):
        assert omega(M(1)) == M(1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_involution(self, n):
        for alpha in compositions(n):
            x = QSymElement.monomial(alpha, "M")
            assert omega(omega(x)) == x

    @pytest.mark.parametrize("n", range(1, 9))
    def test_omega_f_is_complement(self, n):
        for alpha in compositions(n):
            lhs = omega(f_to_m(QSymElement.monomial(alpha, "F")))
            rhs = f_to_m(QSymElement.monomial(alpha.complement(), "F"))
            assert lhs == rhs

    @pytest.mark.parametrize("n", range(1, 9))
    def test_omega_e_is_h(self, n):
        for lam in partitions(n):
            assert omega(generator("e", lam)) == generator("h", lam)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_omega_p_sign(self, k):
        pk = generator("p", Partition((k,)))
        assert omega(pk) == pk.scaled((-1) ** (k - 1))


small_compositions = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(
    lambda parts: Composition(tuple(parts))
)


class TestQuasiShuffle:
    def test_examples(self):
        assert quasi_shuffle(M(1), M(1)) == M(1, 1).scaled(2) + M(2)
        assert quasi_shuffle(M(1), M(2)) == M(1, 2) + M(2, 1) + M(3)

    def test_empty_is_identity(self):
        one = QSymElement.monomial(Composition(()), "M")
        x = M(2, 1) + M(1, 1, 1).scaled(TPoly.t(1))
        assert quasi_shuffle(x, one) == x
        assert quasi_shuffle(one, x) == x

    @settings(max_examples=40, deadline=None)
    @given(small_compositions, small_compositions)
    def test_agrees_with_series_product(self, a, b):
        x = QSymElement.monomial(a, "M")
        y = QSymElement.monomial(b, "M")
        nvars = a.length + b.length + 1
        lhs = expand_series(quasi_shuffle(x, y), nvars)
        rhs = series_product(expand_series(x, nvars), expand_series(y, nvars))
        assert lhs == rhs

    @settings(max_examples=25, deadline=None)
    @given(small_compositions, small_compositions, small_compositions)
    def test_associative_commutative(self, a, b, c):
        x, y, z = (QSymElement.monomial(v, "M") for v in (a, b, c))
        assert quasi_shuffle(x, y) == quasi_shuffle(y, x)
        assert quasi_shuffle(quasi_shuffle(x, y), z) == quasi_shuffle(
            x, quasi_shuffle(y, z)
        )


class TestSymmetry:
    def test_symmetric_example(self):
        x = M(2, 1) + M(1, 2) + M(1, 1, 1)
        assert is_symmetric(x)
        sym = to_m_basis(x)
        assert sym.coeff(Partition((2, 1))) == TPoly.const(1)
        assert sym.coeff(Partition((1, 1, 1))) == TPoly.const(1)

    def test_not_symmetric(self):
        assert not is_symmetric(M(1, 2))
        with pytest.raises(NotSymmetricError) as err:
            to_m_basis(M(1, 2))
        alpha, sorted_alpha = err.value.witness
        assert sorted_alpha == Composition((2, 1))

    def test_to_m_basis_example(self):
        x = M(2) + M(1, 1).scaled(2)
        sym = to_m_basis(x)
        assert sym.coeff(Partition((2,))) == TPoly.const(1)
        assert sym.coeff(Partition((1, 1))) == TPoly.const(2)


class TestGenerators:
    def test_one_part(self):
        assert generator("p", Partition((2,))) == M(2)
        assert generator("e", Partition((2,))) == M(1, 1)
        assert generator("h", Partition((2,))) == M(2) + M(1, 1)

    def test_schur_21(self):
        # SSYT counts: shape (2,1) has K=1 at content (2,1), K=2 at (1,1,1)
        s = to_m_basis(generator("s", Partition((2, 1))))
        assert s.coeff(Partition((2, 1))) == TPoly.const(1)
        assert s.coeff(Partition((1, 1, 1))) == TPoly.const(2)
        assert s.coeff(Partition((3,))) == TPoly()

    def test_kostka(self):
        assert kostka(Partition((2, 1)), Partition((2, 1))) == 1
        assert kostka(Partition((2, 1)), Partition((1, 1, 1))) == 2
        assert kostka(Partition((3,)), Partition((1, 1, 1))) == 1
        assert kostka(Partition((1, 1, 1)), Partition((2, 1))) == 0


class TestExpandInBasis:
    def test_h2_in_e_basis(self):
        x = SymElement(2, "m", {Partition((2,)): TPoly.const(1), Partition((1, 1)): TPoly.const(1)})
        in_e = expand_in_basis(x, "e")
        assert in_e.coeff(Partition((1, 1))) == TPoly.const(1)
        assert in_e.coeff(Partition((2,))) == TPoly.const(-1)

    def test_m11_in_p_basis(self):
        x = SymElement(2, "m", {Partition((1, 1)): TPoly.const(1)})
        in_p = expand_in_basis(x, "p")
        assert in_p.coeff(Partition((1, 1))) == TPoly.const(Fraction(1, 2))
        assert in_p.coeff(Partition((2,))) == TPoly.const(Fraction(-1, 2))

    def test_identity_on_m(self):
        x = SymElement(3, "m", {Partition((2, 1)): TPoly.t(1)})
        assert expand_in_basis(x, "m") is x

    @pytest.mark.parametrize("target", ["e", "h", "p", "s"])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_round_trip(self, target, n):
        for lam in partitions(n):
            x = to_m_basis(generator("h", lam))
            expanded = expand_in_basis(x, target)
            assert contract_to_m(expanded) == x
