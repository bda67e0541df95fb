"""Tests for the class engine: exponent series, fixed-point oracles, the
appendix identities, and the cup product with its class-sum cross-oracle."""

from fractions import Fraction
from math import comb

import pytest

from hilbclass.fock import FockElement, hilb_unit
from hilbclass.hilbert import (
    TANGENT,
    TAUTOLOGICAL,
    ClassSpec,
    builtin_f,
    chern_f,
    cprime_pow_f,
    cup,
    cup_basis,
    cup_from_class_sums,
    hilbert_class,
    lemma_b1,
    ls_oracle,
    oracle_top_tangent,
    oracle_top_taut,
    p_n_series,
    segre_f,
    sqrt_todd_f,
    tangent_g,
    taut_g,
)
from hilbclass.series import TruncatedSeries


def test_builtin_series():
    assert chern_f(3).coeffs == (1, 1, 0, 0)
    assert chern_f(0).coeffs == (1,)
    assert segre_f(3).coeffs == (1, -1, 1, -1)
    assert sqrt_todd_f(3).coeffs == (
        1, Fraction(1, 4), Fraction(1, 96), Fraction(-1, 384)
    )
    half = cprime_pow_f(Fraction(1, 2), 6)
    assert half * half == chern_f(6)
    assert cprime_pow_f(2, 4).coeffs == (1, 2, 1, 0, 0)
    assert builtin_f("chern", 2) == chern_f(2)
    with pytest.raises(ValueError):
        builtin_f("cprime-pow", 4)
    with pytest.raises(ValueError):
        builtin_f("euler", 4)


def test_class_spec_validation():
    with pytest.raises(ValueError):
        ClassSpec(chern_f(3), "normal")
    with pytest.raises(ValueError):
        ClassSpec(TruncatedSeries.from_coeffs([2, 1], 3), TANGENT)


def test_tangent_chern_series():
    g = tangent_g(chern_f(10), 11)
    assert g.to_strings()[:6] == ["0", "1", "0", "-1/3", "0", "2/5"]


def test_taut_chern_series():
    g = taut_g(chern_f(10), 11)
    assert all(g.coeffs[n] == Fraction((-1) ** (n - 1), n)
               for n in range(1, 12))


def test_hilbert_class_weight_two():
    e = hilbert_class(ClassSpec(chern_f(1), TANGENT), 2)
    assert e.terms == {
        (): Fraction(1),
        (1,): Fraction(1),
        (1, 1): Fraction(1, 2),
    }
    with pytest.raises(ValueError):
        hilbert_class(ClassSpec(chern_f(1), TANGENT), 5)


def test_oracles_match_series_for_fixed_f():
    for f in (chern_f(7), segre_f(7), sqrt_todd_f(7)):
        gt = tangent_g(f, 7)
        gq = taut_g(f, 7)
        for n in range(1, 7):
            assert oracle_top_tangent(f, n) == gt.coeffs[n]
            assert oracle_top_taut(f, n) == gq.coeffs[n]


def test_oracle_anchored_values():
    # n = 2 tautological Chern: two fixed points with contents {0,-1} and
    # {0,1} combine to -1/2
    assert oracle_top_taut(chern_f(3), 2) == Fraction(-1, 2)
    assert oracle_top_tangent(chern_f(3), 3) == Fraction(-1, 3)


def test_lemma_b1():
    assert lemma_b1(0, 0) == 1
    assert lemma_b1(25, 25) == -1
    assert all(lemma_b1(7, p) == 0 for p in range(7))
    with pytest.raises(ValueError):
        lemma_b1(3, 4)


def test_p_n_series_for_chern():
    f = chern_f(8)
    for n in range(7):
        p = p_n_series(f, n, 8)
        assert all(p.coeffs[k] == 0 for k in range(n))
        # leading term (-1)^n [x^n] (1+x)^(n+1) = (-1)^n (n+1)
        assert p.coeffs[n] == Fraction((-1) ** n * (n + 1))


def test_cup_basis_anchored():
    assert cup_basis((1, 1), (1, 1)).terms == {(1, 1): Fraction(2)}
    assert cup_basis((2,), (2,)).is_zero
    assert cup_basis((2, 1), (2, 1)).terms == {(3,): Fraction(4)}
    assert cup_basis((1,), (1,)).terms == {(1,): Fraction(1)}


def test_cup_basis_guards():
    with pytest.raises(ValueError):
        cup_basis((2,), (1,))
    with pytest.raises(ValueError):
        cup_basis((), ())


def test_cup_unit_and_bilinearity():
    n = 4
    unit = hilb_unit(n, bound=n)
    a = FockElement.monomial((3, 1), n, Fraction(2, 3))
    b = FockElement.monomial((2, 2), n, 5)
    assert cup(unit, a + b, n) == a + b
    left = cup(a + b, b, n)
    assert left == cup(a, b, n) + cup(b, b, n)


def test_cup_guards():
    a = FockElement.monomial((2,), 3)
    with pytest.raises(ValueError):
        cup(a, a, 3)  # support in weight 2, not 3


def test_ls_oracle_transpositions_squared():
    full = ls_oracle((2, 1), (2, 1), degree_additive=False)
    assert full.as_dict() == {(1, 1, 1): 3, (3,): 3}
    top = ls_oracle((2, 1), (2, 1))
    assert top.as_dict() == {(3,): 3}
    with pytest.raises(ValueError):
        ls_oracle((2,), (1, 1, 1))
    with pytest.raises(ValueError):
        ls_oracle((8,), (8,))


def test_cup_matches_class_sum_oracle_samples():
    samples = [
        ((2, 1), (2, 1)),
        ((3, 1), (2, 2)),
        ((2, 2, 1), (3, 1, 1)),
        ((4, 2), (3, 2, 1)),
    ]
    for lam, mu in samples:
        assert cup_basis(lam, mu) == cup_from_class_sums(lam, mu)


def test_cprime_square_is_lehn_cup_square():
    # the (1+x)^2 tautological class equals Lehn's class cupped with itself
    for n in range(1, 6):
        lehn = hilbert_class(
            ClassSpec(chern_f(max(n - 1, 0)), TAUTOLOGICAL), n
        ).component(n)
        direct = hilbert_class(
            ClassSpec(cprime_pow_f(2, max(n - 1, 0)), TAUTOLOGICAL), n
        ).component(n)
        assert cup(lehn, lehn, n) == direct


def test_segre_closed_form_small():
    g = tangent_g(segre_f(10), 11)
    for n in range(6):
        assert g.coeffs[2 * n + 1] == Fraction(comb(3 * n, n), (2 * n + 1) ** 2)
