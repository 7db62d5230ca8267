from fractions import Fraction

import pytest
from hypothesis import given, settings

from slicereg import I, J, K, ONE, Quaternion, SlicePoly, sphere_of, sphere_poly
from slicereg.errors import PolySyntaxError, UnknownVariable
from slicereg.parser import BinOp, Neg, Num, Pow, Var, infer_nvars, lower, parse, parse_poly
from strategies import polys


def test_product_expression():
    p = parse_poly("(q1 - i)*(q2 - j)", 2)
    assert p == SlicePoly(2, {(1, 1): ONE, (1, 0): -J, (0, 1): -I, (0, 0): K})


def test_sphere_expression():
    assert parse_poly("q^2 + 1", 1) == sphere_poly(sphere_of(I), 1, 1)


def test_rational_constant():
    assert parse_poly("3/2 + 0i", 1) == SlicePoly.constant(Fraction(3, 2), 1)


def test_precedence():
    assert parse("-q^2") == Neg(Pow(Var("q", 1), 2))
    assert parse_poly("-q^2", 1) == -(SlicePoly.var(1, 1) ** 2)
    assert parse_poly("1 + 2*q1*i", 1) == SlicePoly(1, {(0,): ONE, (1,): 2 * I})
    assert parse("2 - 1 - 1") == BinOp("-", BinOp("-", Num(Quaternion(2)), Num(Quaternion(1))),
                                       Num(Quaternion(1)))


def test_star_is_noncommutative_in_coefficients():
    assert parse_poly("i*j*q1", 1) == SlicePoly(1, {(1,): K})
    assert parse_poly("j*i*q1", 1) == SlicePoly(1, {(1,): -K})
    assert parse_poly("(q1*i)*(q1*j)", 1) == SlicePoly(1, {(2,): K})


def test_suffixed_literals():
    assert parse_poly("2i - 1/3k", 1) == SlicePoly.constant(Quaternion(0, 2, 0, Fraction(-1, 3)), 1)


@pytest.mark.parametrize("text,position", [
    ("q1 +", 4),
    ("(q1", 3),
    ("q1 $ 2", 3),
    ("1.5*q1", 0),
    ("q1^i", 3),
    ("q1 q2", 3),
])
def test_syntax_errors(text, position):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, 2)
    assert info.value.position == position


def test_unknown_variables():
    with pytest.raises(UnknownVariable):
        parse_poly("q3", 2)
    with pytest.raises(UnknownVariable):
        parse_poly("q", 2)
    with pytest.raises(UnknownVariable):
        parse_poly("q0", 2)


def test_infer_nvars():
    assert infer_nvars("q1 + q3^2") == 3
    assert infer_nvars("q^2 + 1") == 1
    assert infer_nvars("i") == 1


@settings(max_examples=100)
@given(polys(max_deg=3, max_terms=4))
def test_round_trip(p):
    text = str(p)
    assert parse_poly(text, p.nvars) == p
    assert str(parse_poly(text, p.nvars)) == text


def test_lower_rejects_unknown_nodes():
    with pytest.raises(TypeError):
        lower(object(), 1)
