from fractions import Fraction

import pytest
import sympy as sp

from lefmod._errors import ValidationError
from lefmod.apolar import (
    monomials,
    cogenerate,
    parse_form,
    lorentz_check,
    catalecticant,
)

LORENTZ3 = (
    '14*w1**3 + 6*w1**2*w2 + 24*w1**2*w3 + 12*w1*w2*w3 '
    '+ 6*w1*w3**2 + 3*w2*w3**2'
)


@pytest.fixture(scope = 'module')
def lorentz3():

    return cogenerate(LORENTZ3, n = 3)


def test_monomials():

    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 3)) == 10
    assert monomials(3, 0) == [(0, 0, 0)]


def test_parse_form():

    coeffs, n = parse_form('w1**2 - 1/2*w2**2')

    assert n == 2
    assert coeffs == {(2, 0): Fraction(1), (0, 2): Fraction(-1, 2)}


def test_parse_form_pairs():

    coeffs, n = parse_form([((1, 1), 2), ((1, 1), '1/2')])

    assert n == 2
    assert coeffs == {(1, 1): Fraction(5, 2)}


def test_parse_form_bad_variable():

    with pytest.raises(ValidationError):

        parse_form('x**2 + w1**2')


def test_hilbert_functions(lorentz3):

    assert lorentz3.hilbert_function == (1, 3, 3, 1)
    assert cogenerate('w1**2 - w2**2').hilbert_function == (1, 2, 1)
    assert cogenerate('w1**3').hilbert_function == (1, 1, 1, 1)
    assert cogenerate('w1**3', n = 2).hilbert_function == (1, 1, 1, 1)


def test_catalecticant_rank():

    values = {(1, 1): Fraction(1, 2)}
    cat = catalecticant(values, 2, 2, 1)

    assert cat.rank() == 2


def test_degree_polynomial(lorentz3):

    assert lorentz3.degree_polynomial() == lorentz3.form_polynomial()


def test_evaluate_power(lorentz3):

    assert lorentz3.evaluate_power([1, 0, 0]) == 14
    assert lorentz3.evaluate_power([1, 1, 1]) == 65
    assert lorentz3.evaluate_power([0, 1, 0]) == 0


def test_form_polynomial():

    cog = cogenerate('w1*w2')
    w1, w2 = sp.symbols('w1 w2')

    assert cog.form_polynomial().as_expr() == w1 * w2
    assert cog.degree_polynomial().as_expr() == w1 * w2


def test_variables_nonzero(lorentz3):

    assert all(not lorentz3.variable(i).is_zero() for i in (1, 2, 3))
    assert len(lorentz3.positive_cone().generators) == 3


def test_lorentz_check(lorentz3):

    cert = lorentz_check(lorentz3, samples = 5)

    assert cert.ok
    assert len(cert.points) == 5


def test_indefinite_form_fails():

    cert = lorentz_check(cogenerate('w1**2 - w2**2'), samples = 3)

    assert not cert.ok


def test_not_homogeneous():

    with pytest.raises(ValidationError):

        cogenerate('w1**2 + w2')


def test_wrong_degree():

    with pytest.raises(ValidationError):

        cogenerate('w1**2', d = 3)


def test_zero_form():

    with pytest.raises(ValidationError):

        cogenerate('0')
