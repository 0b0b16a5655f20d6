"""Kauffman bracket and determinant against classical reference values."""

from __future__ import annotations

import pytest

from warpdeg.bracket import (
    BRACKET_CAP,
    BracketPolynomial,
    determinant,
    kauffman_bracket,
)
from warpdeg.codes import parse_dt, parse_gauss, dt_to_gauss
from warpdeg.diagram import from_gauss, mirror, reverse, rotate
from warpdeg.errors import CapExceeded, UnknownSigns
from warpdeg.families import twist_minimal

TREFOIL = "O1+U2+O3+U1+O2+U3+"
FIGURE8 = "O1+U2-O3-U1+O4+U3-O2-U4+"
GRANNY = "O1+O2+U3+O4+U2+O3+U4+U5+O6+U1+O5+U6+"


def diagram(text: str):
    return from_gauss(parse_gauss(text))


def test_unknot_bracket_is_one():
    assert kauffman_bracket(diagram("")).as_dict() == {0: 1}


def test_kink_normalizes_away():
    # writhe normalization makes the bracket blind to a single kink
    assert kauffman_bracket(diagram("O1+U1+")).as_dict() == {0: 1}
    assert kauffman_bracket(diagram("O1-U1-")).as_dict() == {0: 1}


def test_positive_trefoil_bracket():
    assert kauffman_bracket(diagram(TREFOIL)).as_dict() == \
        {-4: 1, -12: 1, -16: -1}


def test_figure_eight_bracket_is_palindromic():
    coeffs = kauffman_bracket(diagram(FIGURE8)).as_dict()
    assert coeffs == {-8: 1, -4: -1, 0: 1, 4: -1, 8: 1}
    assert coeffs == {-e: k for e, k in coeffs.items()}  # amphichiral


def test_mirror_negates_every_exponent():
    poly = kauffman_bracket(diagram(TREFOIL)).as_dict()
    mirrored = kauffman_bracket(mirror(diagram(TREFOIL))).as_dict()
    assert mirrored == {-e: k for e, k in poly.items()}


def test_bracket_ignores_anchor_and_direction():
    d = diagram(FIGURE8)
    want = kauffman_bracket(d).as_dict()
    assert kauffman_bracket(reverse(d)).as_dict() == want
    assert kauffman_bracket(rotate(d, 3)).as_dict() == want


def test_added_kink_leaves_the_bracket_alone():
    plain = kauffman_bracket(diagram(TREFOIL)).as_dict()
    kinked = kauffman_bracket(diagram(TREFOIL + "O4+U4+")).as_dict()
    assert kinked == plain


def test_composite_bracket_is_the_product_of_the_factors():
    tref = kauffman_bracket(diagram(TREFOIL))
    assert kauffman_bracket(diagram(GRANNY)).as_dict() == \
        (tref * tref).as_dict()


def test_twist_knot_determinants():
    # the twist knot of the fraction (2n+1)/2 has determinant 2n + 1
    for n in range(1, 7):
        assert determinant(twist_minimal(n)) == 2 * n + 1


def test_small_determinants():
    assert determinant(diagram("")) == 1
    assert determinant(diagram("O1+U1+")) == 1
    assert determinant(diagram(TREFOIL)) == 3
    assert determinant(diagram(FIGURE8)) == 5
    assert determinant(diagram(GRANNY)) == 9


def test_bracket_needs_every_sign():
    with pytest.raises(UnknownSigns):
        kauffman_bracket(from_gauss(dt_to_gauss(parse_dt("4 6 2"))))


def test_bracket_cap_is_enforced():
    big = twist_minimal(BRACKET_CAP - 1)  # c = cap + 1
    with pytest.raises(CapExceeded):
        kauffman_bracket(big)
    assert determinant(big, cap=BRACKET_CAP + 1) == 2 * (BRACKET_CAP - 1) + 1


def test_polynomial_value_object():
    poly = BracketPolynomial.from_dict({2: 1, 0: -3, 4: 0})
    assert poly.coefficients == ((0, -3), (2, 1))
    assert poly.as_dict() == {0: -3, 2: 1}
    assert str(BracketPolynomial.from_dict({0: 1})) == "1"
    assert str(BracketPolynomial.from_dict({})) == "0"
    assert str(BracketPolynomial.from_dict({-4: 1, 0: 2, 8: -1})) == \
        "A^-4 + 2 - A^8"


def test_polynomial_product():
    # (1 + A^2)(1 - A^-2): the constant terms cancel
    a = BracketPolynomial.from_dict({0: 1, 2: 1})
    b = BracketPolynomial.from_dict({0: 1, -2: -1})
    assert (a * b).as_dict() == {-2: -1, 2: 1}

