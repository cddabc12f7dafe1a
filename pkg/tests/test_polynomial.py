import pytest
from hypothesis import given, strategies as st
from sympy import Integer, symbols, expand, Poly

from src.utils import UnivariatePolynomial, BivariatePolynomial

X, Y = symbols("x y")

small_terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-5, 5),
    max_size=6,
)


def to_sympy(p: BivariatePolynomial):
    return sum((c * X ** i * Y ** j for (i, j), c in p.terms.items()), Integer(0))


def test_zero_terms_are_dropped():
    p = UnivariatePolynomial({0: 0, 2: 3})
    assert p.terms == {2: 3}
    assert UnivariatePolynomial({1: 0}).is_zero()


def test_univariate_arithmetic():
    t = UnivariatePolynomial.monomial(1)
    p = t * t + 1
    assert p == UnivariatePolynomial({0: 1, 2: 1})
    assert p - 1 == t * t
    assert (p * p).coefficient(2) == 2
    assert 2 * t == UnivariatePolynomial({1: 2})


def test_univariate_str():
    assert str(UnivariatePolynomial({2: 1, 4: 1})) == "t^2 + t^4"
    assert str(UnivariatePolynomial({0: 2})) == "2"
    assert str(UnivariatePolynomial({1: -1, 3: 2})) == "-t + 2t^3"
    assert str(UnivariatePolynomial.zero()) == "0"


def test_shift_and_substitution():
    p = UnivariatePolynomial({1: 1, 2: 1})
    assert p.substitute_t_squared() == UnivariatePolynomial({2: 1, 4: 1})
    assert p.shift(-1) == UnivariatePolynomial({0: 1, 1: 1})
    assert UnivariatePolynomial.zero().shift(-3).is_zero()
    with pytest.raises(ValueError):
        p.shift(-2)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        UnivariatePolynomial({-1: 1})
    with pytest.raises(ValueError):
        BivariatePolynomial({(0, -1): 1})


def test_float_coefficient_rejected():
    with pytest.raises(TypeError):
        UnivariatePolynomial({1: 1.5})


def test_degree():
    assert UnivariatePolynomial({3: 1, 1: 4}).degree == 3
    assert UnivariatePolynomial({3: 1, 1: 4}).low_degree == 1
    assert UnivariatePolynomial.zero().degree is None


def test_json_uses_string_coefficients():
    big = 10 ** 30
    p = UnivariatePolynomial({2: big})
    assert p.to_json() == {"terms": [{"e": 2, "c": str(big)}]}
    assert UnivariatePolynomial.from_json(p.to_json()) == p
    q = BivariatePolynomial({(2, 0): 1, (0, 1): 1})
    assert q.to_json() == {"terms": [{"x": 0, "y": 1, "c": "1"}, {"x": 2, "y": 0, "c": "1"}]}


def test_bivariate_str_and_specialization():
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    tutte_u23 = x * x + x + y
    assert str(tutte_u23) == "x^2 + x + y"
    assert str(x + y + y * y) == "x + y + y^2"
    assert tutte_u23.at_x(1) == UnivariatePolynomial({0: 2, 1: 1})
    assert tutte_u23.at_x(0) == UnivariatePolynomial.monomial(1)
    assert (x * x).at_x(0).is_zero()
    assert tutte_u23.evaluate(1, 0) == 2


def test_power():
    x = BivariatePolynomial.x()
    assert (x - 1) ** 0 == BivariatePolynomial.one()
    assert (x - 1) ** 2 == x * x - 2 * x + 1


def test_hash_matches_equality():
    a = UnivariatePolynomial({1: 1, 2: 0})
    b = UnivariatePolynomial({1: 1})
    assert a == b and hash(a) == hash(b)
    assert len({BivariatePolynomial.x(), BivariatePolynomial({(1, 0): 1})}) == 1


@pytest.mark.property_based
@given(small_terms, small_terms)
def test_bivariate_product_matches_sympy(a, b):
    p, q = BivariatePolynomial(a), BivariatePolynomial(b)
    assert expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert expand(to_sympy(p + q) - to_sympy(p) - to_sympy(q)) == 0


@pytest.mark.property_based
@given(small_terms, st.integers(-2, 2))
def test_at_x_matches_sympy(a, x0):
    p = BivariatePolynomial(a)
    expected = Poly(to_sympy(p).subs(X, x0) + 0 * Y, Y)
    got = p.at_x(x0)
    assert {e: c for e, c in got.items()} == {m[0]: int(c) for m, c in expected.terms() if c != 0}
