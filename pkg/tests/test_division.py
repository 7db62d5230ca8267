import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicereg import (I, J, Quaternion, SlicePoly, div_monic, double_remainder, evaluate,
                      reduce_chain, sphere_of, sphere_poly)
from slicereg.division import leading_part, monic_degree
from slicereg.errors import BadIndex, ChainOrderViolation, IndexClash, NotMonic
from slicereg.parser import parse_poly
from slicereg.polyring import linear_poly, random_poly
from strategies import polys, quaternions


def test_linear_division():
    a = Quaternion(1, 0, 2)
    quotient, rem = div_monic(parse_poly("q1^2", 1), linear_poly(a, 1, 1), 1)
    assert quotient == SlicePoly.var(1, 1) + a
    assert rem == SlicePoly.constant(a * a, 1)
    assert rem == SlicePoly.constant(Quaternion(-3, 0, 4), 1)


def test_sphere_divided_by_its_root():
    a = Quaternion(2, 1, -1, 3)
    quotient, rem = div_monic(sphere_poly(sphere_of(a), 2, 2), linear_poly(a, 2, 2), 2)
    assert quotient == linear_poly(a.conj(), 2, 2)
    assert rem.is_zero()


def test_random_division_by_sphere():
    rng = random.Random(7)
    m = sphere_poly(sphere_of(Quaternion(1, 1, 1)), 2, 3)
    for _ in range(20):
        p = random_poly(rng, 3, max_deg=4, max_terms=5)
        quotient, rem = div_monic(p, m, 2)
        assert m * quotient + rem == p
        assert rem.deg_in(2) < 2


def test_monic_checks():
    with pytest.raises(NotMonic):
        monic_degree(SlicePoly(1, {(1,): I}), 1)
    with pytest.raises(NotMonic):
        monic_degree(SlicePoly.constant(1, 1), 1)
    with pytest.raises(NotMonic):
        # leading q1-coefficient q2 is not the constant 1
        monic_degree(parse_poly("q1*q2 + 1", 2), 1)
    with pytest.raises(BadIndex):
        monic_degree(SlicePoly.var(1, 1), 2)
    assert leading_part(parse_poly("q1^2*q2 + q1^2*i + q1", 2), 1) == \
        (2, parse_poly("q2 + i", 2))


@settings(max_examples=80)
@given(polys(2, max_deg=3, max_terms=4), quaternions, st.integers(1, 2))
def test_division_by_linear(p, a, m):
    divisor = linear_poly(a, m, 2)
    quotient, rem = div_monic(p, divisor, m)
    assert divisor * quotient + rem == p
    assert rem.deg_in(m) <= 0
    assert rem.free_of(m)


def test_double_remainder_examples():
    m = sphere_poly(sphere_of(I), 1, 2)
    ell = sphere_poly(sphere_of(J), 2, 2)
    t = double_remainder(parse_poly("q1^2*q2^2", 2), m, ell, 1, 2)
    assert t == SlicePoly.constant(1, 2)
    reduced = parse_poly("q1*q2*k + q2 - 3", 2)
    assert double_remainder(reduced, m, ell, 1, 2) == reduced
    rng = random.Random(3)
    for _ in range(10):
        x, y = random_poly(rng, 2), random_poly(rng, 2)
        assert double_remainder(m * x + ell * y, m, ell, 1, 2).is_zero()


def test_double_remainder_errors():
    m = sphere_poly(sphere_of(I), 1, 2)
    with pytest.raises(IndexClash):
        double_remainder(m, m, m, 1, 1)
    with pytest.raises(ChainOrderViolation):
        double_remainder(m, m, parse_poly("q2 - q1", 2), 1, 2)


def test_reduce_chain_examples():
    rng = random.Random(11)
    spheres = [sphere_poly(sphere_of(Quaternion(0, 1, 1, 1)), 1, 3),
               sphere_poly(sphere_of(Quaternion(2, 0, 3)), 2, 3)]
    for _ in range(10):
        p = random_poly(rng, 3, max_deg=4, max_terms=4)
        cofactors, rem = reduce_chain(p, [(s, i + 1) for i, s in enumerate(spheres)])
        assert rem.deg_in(1) <= 1 and rem.deg_in(2) <= 1
        assert sum((s * c for s, c in zip(spheres, cofactors)), rem) == p

    a = (Quaternion(1, 2), J, Quaternion(0, 1, 1, 1))
    p = random_poly(rng, 3, max_deg=3, max_terms=5)
    chain = [(linear_poly(a[m - 1], m, 3), m) for m in (3, 2, 1)]
    _, rem = reduce_chain(p, chain)
    assert rem == SlicePoly.constant(evaluate(p, a), 3)

    assert reduce_chain(p, []) == ([], p)


def test_reduce_chain_order_is_enforced():
    with pytest.raises(ChainOrderViolation):
        reduce_chain(SlicePoly.var(1, 2),
                     [(parse_poly("q1 - i", 2), 1), (parse_poly("q2 - q1", 2), 2)])
