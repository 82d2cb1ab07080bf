import math
from fractions import Fraction

import pytest

from fracorder.residue import (
    ResidueTerm,
    closed_form_coeff,
    indented_integral_value,
    residue_at,
    residue_terms,
)


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


@pytest.mark.parametrize("n, j, expected", [(3, 0, Fraction(1, 6)), (4, 2, Fraction(1, 4)), (1, 1, Fraction(1))])
def test_residue_examples(n, j, expected):
    assert residue_at(n, j) == expected


@pytest.mark.parametrize("n, expected", [(1, Fraction(2)), (3, Fraction(4, 3)), (5, Fraction(4, 15))])
def test_closed_form_examples(n, expected):
    assert closed_form_coeff(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 2 * math.pi), (2, 2 * math.pi), (3, 4 * math.pi / 3)])
def test_indented_value_examples(n, expected):
    assert indented_integral_value(n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("n", range(1, 31))
def test_residues_are_binomials_over_factorial(n):
    row = pascal_row(n)
    n_fact = math.factorial(n)
    for j in range(n + 1):
        assert residue_at(n, j) == Fraction(row[j], n_fact)


@pytest.mark.parametrize("n", range(1, 31))
def test_residue_sum_is_power_of_two(n):
    assert closed_form_coeff(n) == Fraction(2**n, math.factorial(n))


def test_no_overflow_beyond_64_bit():
    # 30! exceeds 2**64; Fraction keeps it exact
    assert residue_at(30, 0).denominator == math.factorial(30)
    assert math.factorial(30) > 2**64


def test_residues_positive():
    for n in range(1, 31):
        assert all(term.value > 0 for term in residue_terms(n))


def test_terms_cover_all_poles():
    terms = residue_terms(4)
    assert [t.pole for t in terms] == [0, 1, 2, 3, 4]
    assert all(isinstance(t, ResidueTerm) for t in terms)


@pytest.mark.parametrize("n, j", [(0, 0), (3, 4), (3, -1)])
def test_invalid_arguments(n, j):
    with pytest.raises(ValueError):
        residue_at(n, j)
