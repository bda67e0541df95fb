"""Tests for weight-truncated creation-monomial combinations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbclass.fock import FockElement, exp_linear, hilb_unit
from hilbclass.partitions import weight
from hilbclass.series import TruncatedSeries

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def test_monomial_and_vacuum():
    v = FockElement.vacuum(3)
    assert v.coefficient(()) == 1
    q = FockElement.monomial((2, 1), 4, Fraction(1, 2))
    assert q.coefficient((2, 1)) == Fraction(1, 2)
    assert q.coefficient((3,)) == 0


def test_truncation_drops_overflow():
    q = FockElement.monomial((3,), 2)
    assert q.is_zero
    a = FockElement.monomial((2,), 3)
    b = FockElement.monomial((2,), 3)
    assert (a * b).is_zero  # weight 4 > bound 3
    c = FockElement.monomial((1,), 3)
    assert (a * c).coefficient((2, 1)) == 1


def test_product_merges_partitions():
    a = FockElement.monomial((2, 1), 8, 2)
    b = FockElement.monomial((3, 2), 8, Fraction(1, 2))
    assert (a * b).terms == {(3, 2, 2, 1): Fraction(1)}


def test_linear_structure():
    a = FockElement.monomial((2,), 3)
    b = FockElement.monomial((1, 1), 3)
    s = a + b.scale(3)
    assert s.coefficient((1, 1)) == 3
    assert (s - s).is_zero
    assert s == s


def test_compatibility_guards():
    a = FockElement.monomial((1,), 2)
    b = FockElement.monomial((1,), 3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(TypeError):
        a + 1


def test_components_partition_element():
    g = TruncatedSeries.from_coeffs([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3)
    e = exp_linear(g, 3)
    rebuilt = FockElement(e.ring, e.bound, {})
    for n in range(4):
        rebuilt = rebuilt + e.component(n)
    assert rebuilt == e
    for n in range(4):
        comp = e.component(n)
        assert all(weight(p) == n for p in comp.terms)
    by_degree = FockElement(e.ring, e.bound, {})
    for d in range(4):
        by_degree = by_degree + e.degree_component(d)
    assert by_degree == e
    with pytest.raises(ValueError):
        e.component(4)


def test_exp_linear_anchored():
    g = TruncatedSeries.from_coeffs([0, 1, Fraction(-1, 2)], 2)
    e = exp_linear(g, 2)
    assert e.terms == {
        (): Fraction(1),
        (1,): Fraction(1),
        (2,): Fraction(-1, 2),
        (1, 1): Fraction(1, 2),
    }


def test_exp_linear_guards():
    with pytest.raises(ValueError):
        exp_linear(TruncatedSeries.one(4), 4)
    with pytest.raises(ValueError):
        exp_linear(TruncatedSeries.zero(2), 4)


@given(
    st.lists(small_rationals, min_size=5, max_size=5),
    st.lists(small_rationals, min_size=5, max_size=5),
)
@settings(max_examples=30)
def test_exp_linear_is_exponential(c1, c2):
    g1 = TruncatedSeries.from_coeffs([0] + c1, 5)
    g2 = TruncatedSeries.from_coeffs([0] + c2, 5)
    assert exp_linear(g1 + g2, 5) == exp_linear(g1, 5) * exp_linear(g2, 5)


def test_sorted_terms_and_records():
    e = FockElement(
        FockElement.vacuum(3).ring,
        3,
        {
            (1, 1, 1): Fraction(1, 6),
            (3,): Fraction(2),
            (1,): Fraction(-1),
            (2, 1): Fraction(1, 2),
        },
    )
    assert [p for p, _ in e.sorted_terms()] == [(1,), (3,), (2, 1), (1, 1, 1)]
    assert e.to_records() == [
        {"partition": [1], "coeff": "-1"},
        {"partition": [3], "coeff": "2"},
        {"partition": [2, 1], "coeff": "1/2"},
        {"partition": [1, 1, 1], "coeff": "1/6"},
    ]


def test_hilb_unit():
    u = hilb_unit(3)
    assert u.terms == {(1, 1, 1): Fraction(1, 6)}
    assert hilb_unit(0).terms == {(): Fraction(1)}
