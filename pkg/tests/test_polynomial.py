from fractions import Fraction

import pytest

from voa.polynomial import CartanPolynomial, rational_roots, span_rank
from voa.root_system import Weight

h = CartanPolynomial.variable


def test_arithmetic_and_evaluation():
    p = h(2, 1) * (h(2, 1).scale(Fraction(1, 3)) + h(2, 2).scale(Fraction(2, 3)) + CartanPolynomial.constant(2, Fraction(1, 2)))
    assert p.degree == 2
    assert p.evaluate([3, 0]) == Fraction(9, 2)
    assert p.evaluate_weight(Weight(2, (Fraction(-3, 2), 0))) == 0
    assert (p - p).is_zero()
    assert CartanPolynomial.zero(2).degree == -1
    assert -p == p.scale(-1)
    with pytest.raises(ValueError):
        p.evaluate([1])
    with pytest.raises(ValueError):
        p + h(4, 1)


def test_linear_constructor_and_form():
    p = CartanPolynomial.linear(4, {1: 2, 3: Fraction(-1, 2)}, 5)
    assert p.linear_form() == (Fraction(5), {1: Fraction(2), 3: Fraction(-1, 2)})
    with pytest.raises(ValueError):
        (h(2, 1) * h(2, 2)).linear_form()


def test_restrict_and_divide():
    p = h(2, 1) * h(2, 2) + h(2, 1) * h(2, 1)
    assert p.restrict([2]) == h(2, 1) * h(2, 1)
    assert p.divide_by_monomial((1, 0)) == h(2, 2) + h(2, 1)
    with pytest.raises(ValueError):
        p.divide_by_monomial((0, 1))


def test_substitute_affine():
    p = h(2, 1) * h(2, 2)
    # h1 = 1 + 2t, h2 = t
    coeffs = p.substitute_affine({1: (Fraction(1), Fraction(2)), 2: (Fraction(0), Fraction(1))})
    assert coeffs == [0, 1, 2]
    assert CartanPolynomial.constant(2, 3).substitute_affine({}) == [3]
    with pytest.raises(ValueError):
        p.substitute_affine({1: (Fraction(0), Fraction(1))})


def test_rendering():
    assert str(CartanPolynomial.linear(2, {1: Fraction(1, 3)}, Fraction(1, 2))) == "1/3*h1 + 1/2"
    assert str(h(2, 1) * h(2, 1) - h(2, 2)) == "h1^2 - h2"
    assert str(CartanPolynomial.zero(2)) == "0"


def test_span_rank():
    assert span_rank([h(2, 1), h(2, 2), h(2, 1) + h(2, 2)]) == 2
    assert span_rank([]) == 0
    assert span_rank([CartanPolynomial.zero(2)]) == 0
    assert span_rank([h(4, i) * h(4, i) for i in range(1, 5)]) == 4


def test_rational_roots():
    assert rational_roots([Fraction(-1), Fraction(0), Fraction(1)]) == ([Fraction(-1), Fraction(1)], 0)
    assert rational_roots([Fraction(-2), Fraction(0), Fraction(1)]) == ([], 2)
    assert rational_roots([Fraction(0), Fraction(3, 2), Fraction(1)]) == ([Fraction(-3, 2), Fraction(0)], 0)
    assert rational_roots([Fraction(5)]) == ([], 0)
    with pytest.raises(ValueError):
        rational_roots([Fraction(0), Fraction(0)])
