import sympy as sp

from tuttekit.polynomial import (
    BivariatePolynomial, UnivariatePolynomial, evaluate, specialize_x_at_1,
    specialize_y_at_1, x, y
)


def k3():
    return BivariatePolynomial.from_expr(x**2 + x + y)


def test_coefficients():
    poly = k3()
    assert poly.coeffs == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert poly.coefficient(0, 0) == 0
    assert poly.total_degree() == 2


def test_from_dict_drops_zeros():
    poly = BivariatePolynomial.from_dict({(1, 0): 1, (0, 1): 0})
    assert poly.coeffs == {(1, 0): 1}
    assert BivariatePolynomial.from_dict({}).is_zero
    assert BivariatePolynomial().total_degree() is None


def test_arithmetic():
    a = BivariatePolynomial.monomial(1, 0)
    b = BivariatePolynomial.monomial(0, 1)
    assert a + b == BivariatePolynomial.from_expr(x + y)
    assert (a + b) * (a + b) == BivariatePolynomial.from_expr((x + y)**2)


def test_swap():
    assert k3().swap() == BivariatePolynomial.from_expr(y**2 + y + x)


def test_specialisations():
    poly = k3()
    at_x_1 = specialize_x_at_1(poly)
    assert at_x_1.coeffs == {0: 2, 1: 1}
    assert at_x_1[5] == 0
    assert at_x_1.degree == 1
    at_y_1 = specialize_y_at_1(poly)
    assert at_y_1.coeffs == {0: 1, 1: 1, 2: 1}


def test_evaluate():
    assert evaluate(k3(), 2, 2) == 8
    assert evaluate(k3(), 1, 1) == 3


def test_big_integers_stay_exact():
    big = 3**80
    poly = BivariatePolynomial.monomial(4, 0, big)
    assert poly.coefficient(4, 0) == big
    assert poly.evaluate(1, 1) == big


def test_nonnegative():
    assert k3().is_nonnegative()
    assert not BivariatePolynomial.from_expr(x - y).is_nonnegative()


def test_lines_are_sorted_by_exponents():
    assert k3().lines() == ['0 1 1', '1 0 1', '2 0 1']


def test_univariate_lines():
    poly = UnivariatePolynomial.from_dict({3: 1, 0: 6, 1: 6, 2: 3})
    assert poly.lines() == ['0 6', '1 6', '2 3', '3 1']
    assert UnivariatePolynomial.from_dict({}).degree is None


def test_equality_and_hash():
    a = BivariatePolynomial.from_expr(sp.expand((x + 1) * (y + 1)))
    b = BivariatePolynomial.from_dict({(1, 1): 1, (1, 0): 1, (0, 1): 1,
                                       (0, 0): 1})
    assert a == b
    assert hash(a) == hash(b)
