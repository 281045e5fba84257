from fractions import Fraction

from dissecta.polynomial import Poly, Poly2


def test_poly_basics():
    p = Poly({2: 4, 1: 4, 0: 1})
    assert str(p) == "4*x^2 + 4*x + 1"
    assert p(1) == 9 and p(-1) == 1 and p(0) == 1
    assert p.substitute_neg() == Poly({2: 4, 1: -4, 0: 1})
    assert p - p == Poly.zero()
    assert str(Poly.zero()) == "0"


def test_poly_signs_and_unit_coefficients():
    p = Poly({3: -1, 1: 1, 0: -7})
    assert str(p) == "- x^3 + x - 7"
    q = Poly({2: 1})
    assert str(q) == "x^2"


def test_poly_fraction_normalization():
    p = Poly({1: Fraction(4, 2), 0: Fraction(1, 3)})
    assert p.terms[1] == 2 and isinstance(p.terms[1], int)
    assert p.terms[0] == Fraction(1, 3)
    assert not p.is_integral()
    assert str(p) == "2*x + 1/3"
    assert Poly({0: Fraction(6, 3)}).is_integral()


def test_poly_zero_coefficients_dropped():
    assert Poly({5: 0, 1: 2}).terms == {1: 2}
    assert Poly({1: 1}) + Poly({1: -1}) == Poly.zero()


def test_poly2_rendering_canonical_order():
    p = Poly2({(2, 2): 1, (2, 1): -2, (2, 0): 1, (1, 2): -2, (1, 1): 2, (0, 2): 1})
    assert str(p) == "x^2*y^2 - 2*x^2*y - 2*x*y^2 + x^2 + 2*x*y + y^2"
    assert str(Poly2({(0, 0): 1})) == "1"
    assert str(Poly2()) == "0"


def test_poly2_substitution():
    p = Poly2({(2, 1): 3, (1, 0): -1, (0, 2): 5})
    assert p.substitute(x_sign=-1) == Poly2({(2, 1): 3, (1, 0): 1, (0, 2): 5})
    assert p.substitute(y=-1) == Poly({2: -3, 1: -1, 0: 5})
    assert p.substitute(x_sign=-1, y=-1) == Poly({2: -3, 1: 1, 0: 5})
    assert p(2, -1) == -9  # 3*4*(-1) - 2 + 5


def test_poly_evaluation_is_exact():
    p = Poly({0: Fraction(1, 2), 1: Fraction(1, 2)})
    assert p(1) == 1 and isinstance(p(1), int)
    assert p(2) == Fraction(3, 2)
