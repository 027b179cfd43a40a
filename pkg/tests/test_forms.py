from fractions import Fraction

import pytest

from cbmfd.forms import Form, product_of_linear_forms
from cbmfd.projective import ProjPoint


def P(*coords):
    return ProjPoint.of(coords)


def test_linear_form_evaluation():
    f = Form.linear([1, 0, -2])  # x - 2z
    assert f.evaluate(P(2, 5, 1)) == 0
    assert f.evaluate(P(3, 0, 1)) == 1


def test_normalization_content_and_sign():
    f = Form.from_coeffs(2, 1, [-2, 4, -6])
    assert f.coeffs == (1, -2, 3)
    g = Form.from_coeffs(2, 1, [Fraction(1, 2), 0, Fraction(3, 4)])
    assert g.coeffs == (2, 0, 3)


def test_zero_rejected():
    with pytest.raises(ValueError):
        Form.from_coeffs(2, 1, [0, 0, 0])


def test_coefficient_count_checked():
    with pytest.raises(ValueError):
        Form(2, 2, (1, 0, 0))


def test_product_degree_and_vanishing():
    # (x - z)(y - z) vanishes where either factor does
    a = Form.linear([1, 0, -1])
    b = Form.linear([0, 1, -1])
    prod = a * b
    assert prod.degree == 2
    assert prod.vanishes_at(P(1, 5, 1))
    assert prod.vanishes_at(P(7, 1, 1))
    assert not prod.vanishes_at(P(2, 3, 1))


def test_from_monomials_matches_product():
    # (x - z)(x + z) = x^2 - z^2
    a = Form.linear([1, 0, -1])
    b = Form.linear([1, 0, 1])
    direct = Form.from_monomials(2, 2, {(2, 0, 0): 1, (0, 0, 2): -1})
    assert a * b == direct


def test_product_of_linear_forms_grid_column():
    fs = [Form.linear([1, 0, -i]) for i in range(3)]
    cubic = product_of_linear_forms(fs)
    assert cubic.degree == 3
    for i in range(3):
        assert cubic.vanishes_at(P(i, 4, 1))
    assert not cubic.vanishes_at(P(5, 0, 1))


def test_evaluation_well_defined_on_representatives():
    f = Form.from_monomials(2, 2, {(1, 1, 0): 1, (0, 0, 2): -1})  # xy - z^2
    assert f.evaluate((1, 1, 1)) == 0
    assert f.evaluate((2, 2, 2)) == 0
    assert f.evaluate((1, 2, 1)) == 1
