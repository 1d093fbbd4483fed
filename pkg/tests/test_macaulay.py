import pytest
from hypothesis import given, strategies as st

from lexgotz.macaulay import (
    MacaulayExpansion,
    binomial,
    derivative,
    lemma31_predicate,
    lemma32_predicate,
    macaulay_expand,
    upper_shift,
)

from oracles import derivative_by_definition, pascal_binomial


def test_binomial_small():
    assert binomial(5, 3) == 10
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1


def test_binomial_large_against_pascal():
    assert binomial(60, 30) == pascal_binomial(60, 30) == 118264581564861424


@pytest.mark.parametrize("n", range(0, 25))
def test_binomial_rows(n):
    assert [binomial(n, k) for k in range(n + 3)] == [pascal_binomial(n, k) for k in range(n + 3)]


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 2)


@pytest.mark.parametrize(
    "a, d, terms",
    [
        (0, 5, ()),
        (10, 3, ((5, 3),)),
        (7, 3, ((4, 3), (3, 2))),
        (3, 3, ((3, 3), (2, 2), (1, 1))),
        (8, 3, ((4, 3), (3, 2), (1, 1))),
    ],
)
def test_expand_examples(a, d, terms):
    exp = macaulay_expand(a, d)
    assert exp.terms == terms
    assert exp.value == a


def test_expansion_type_rejects_bad_terms():
    with pytest.raises(ValueError):
        MacaulayExpansion(3, ((4, 3), (4, 2)))
    with pytest.raises(ValueError):
        MacaulayExpansion(3, ((4, 3), (1, 1)))
    with pytest.raises(ValueError):
        MacaulayExpansion(3, ((4, 3), (1, 2)))


def test_expand_rejects_bad_degree():
    with pytest.raises(ValueError):
        macaulay_expand(3, 0)


@pytest.mark.parametrize("a, d, want", [(0, 4, 0), (7, 3, 9), (3, 2, 4), (8, 3, 10)])
def test_upper_shift(a, d, want):
    assert upper_shift(a, d) == want


@pytest.mark.parametrize("a, d, want", [(0, 3, 0), (7, 3, 2), (3, 3, 0), (4, 3, 1)])
def test_derivative(a, d, want):
    assert derivative(a, d) == want


def test_derivative_agrees_with_search_based_expansion():
    for d in range(1, 6):
        for a in range(0, 300):
            assert derivative(a, d) == derivative_by_definition(a, d), (a, d)


@given(st.integers(0, 10**40), st.integers(1, 30))
def test_expansion_properties_big(a, d):
    exp = macaulay_expand(a, d)
    assert exp.value == a
    assert exp.upper_shift() == a + exp.derivative()


@given(st.integers(0, 10**12), st.integers(0, 10**12), st.integers(1, 15))
def test_upper_shift_strictly_monotone(a, b, d):
    if a < b:
        assert upper_shift(a, d) < upper_shift(b, d)


@pytest.mark.parametrize(
    "b, c, d, want",
    [(7, 8, 3, True), (7, 9, 3, False), (4, 5, 3, True), (4, 6, 3, True), (4, 7, 3, False)],
)
def test_lemma31_examples(b, c, d, want):
    assert lemma31_predicate(b, c, d) is want
    assert (derivative(b, d) == derivative(c, d)) is want


def test_lemma31_rejects_unordered():
    with pytest.raises(ValueError):
        lemma31_predicate(5, 5, 3)
    with pytest.raises(ValueError):
        lemma31_predicate(0, 5, 3)


@pytest.mark.parametrize("c, d, want", [(3, 3, True), (4, 3, False), (1, 1, True)])
def test_lemma32_examples(c, d, want):
    assert lemma32_predicate(c, d) is want
    assert (derivative(c, d) == 0) is want


def test_lemma32_rejects_zero():
    with pytest.raises(ValueError):
        lemma32_predicate(0, 3)


def test_lemma31_small_box():
    for d in range(1, 6):
        for b in range(1, 150):
            for c in range(b + 1, 151):
                assert lemma31_predicate(b, c, d) == (derivative(b, d) == derivative(c, d))
