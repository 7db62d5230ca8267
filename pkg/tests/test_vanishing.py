import logging
import random

import pytest

from slicereg import (I, J, K, Balloon, NotVanishing, Quaternion, SlicePoly,
                      VanishingCertificate, balloon_divisors, conjugate_by,
                      decompose_at_point, evaluate, factor_slab, q_ell_poly,
                      sphere_of, sphere_poly, vanishes_on_arranged_sphere,
                      vanishes_on_balloon, vanishes_on_sphere_point_set,
                      vanishes_on_sphere_product)
from slicereg.errors import (ArityMismatch, BadIndex, DegenerateSphere, InvalidBalloon, NotArranged,
                             NotArrangedPair, RealComponent)
from slicereg.parser import parse_poly
from slicereg.polyring import random_poly
from slicereg.vanishing import sample_points

PRODUCT = parse_poly("(q1 - i)*(q2 - j)", 2)


def test_decompose_examples():
    out = decompose_at_point(PRODUCT, (I, J))
    assert isinstance(out, NotVanishing) and not out
    assert out.value == 2 * K
    cert = decompose_at_point(PRODUCT, (I, Quaternion(3, 1)))
    assert isinstance(cert, VanishingCertificate) and cert.is_valid()
    zero = decompose_at_point(SlicePoly.zero(2), (I, J))
    assert zero and all(c.is_zero() for c in zero.cofactors)


def test_decompose_cofactor_variables():
    rng = random.Random(5)
    a = (Quaternion(1, 2), J, Quaternion(0, 1, -1, 2))
    for _ in range(10):
        p = random_poly(rng, 3)
        p = p - evaluate(p, a)
        cert = decompose_at_point(p, a)
        assert cert.is_valid()
        for d, c in zip(cert.divisors, cert.cofactors):
            assert all(c.free_of(m) for m in range(d.var + 1, 4))


def test_factor_slab_examples():
    rng = random.Random(2)
    x = random_poly(rng, 2)
    assert factor_slab((SlicePoly.var(2, 2) - J) * x, J, 2) == x
    assert not factor_slab(parse_poly("q1 - i", 2), Quaternion(1, 1), 2)
    assert factor_slab(PRODUCT, I, 1) == parse_poly("q2 - j", 2)


def test_sphere_product_examples():
    p = sphere_poly(sphere_of(I), 1, 2)
    cert = vanishes_on_sphere_product(p, [I])
    assert cert.is_valid() and cert.cofactors[0] == SlicePoly.constant(1, 2)
    rng = random.Random(4)
    s1, s2 = sphere_poly(sphere_of(I), 1, 2), sphere_poly(sphere_of(J + 1), 2, 2)
    member = s1 * random_poly(rng, 2) + s2 * random_poly(rng, 2)
    assert vanishes_on_sphere_product(member, [I, J + 1]).is_valid()
    out = vanishes_on_sphere_product(parse_poly("q1 + q2", 2), [I, J])
    assert not out and out.point is not None
    assert evaluate(parse_poly("q1 + q2", 2), out.point) == out.value != 0


def test_sphere_product_accepts_descriptors():
    p = sphere_poly(sphere_of(Quaternion(1, 2)), 1, 1)
    assert vanishes_on_sphere_product(p, [sphere_of(Quaternion(1, 2))])
    with pytest.raises(DegenerateSphere):
        vanishes_on_sphere_product(p, [Quaternion(3)])
    with pytest.raises(ArityMismatch):
        vanishes_on_sphere_product(p, [I, J])


def test_sphere_point_set_examples():
    tail = (Quaternion(1, 1), Quaternion(2, 3))
    n = 3
    p = sphere_poly(sphere_of(J), 1, n) * parse_poly("q2*q3 + k", n) \
        + (SlicePoly.var(2, n) - tail[0]) * parse_poly("q3 - 1", n)
    cert = vanishes_on_sphere_point_set(p, [J], tail)
    assert cert.is_valid() and cert.shape == "spheres_then_linear"
    assert vanishes_on_sphere_point_set(SlicePoly.var(2, n) - tail[0], [J], tail)
    assert not vanishes_on_sphere_point_set(SlicePoly.constant(2, n), [J], tail)


def test_sphere_point_set_noncommuting_tail():
    tail = (I, J)
    p = (SlicePoly.var(3, 3) - J) * parse_poly("q1*q2*q3 + i", 3) \
        + (SlicePoly.var(2, 3) - I) * parse_poly("q1 + j", 3)
    cert = vanishes_on_sphere_point_set(p, [K], tail)
    assert cert.is_valid() and cert.shape == "linear_then_spheres"
    for pt in sample_points(cert.target, 10, random.Random(1)):
        assert evaluate(p, pt) == 0


def test_q_ell_examples():
    q = q_ell_poly(I, Quaternion(1, 2), 1, 2)
    assert q == parse_poly("q1 - 1/2*q2 + 1/2", 2)
    assert evaluate(q, (I, Quaternion(1, 2))) == 0
    q = q_ell_poly(I, -I, 1, 2)
    assert q == parse_poly("q1 + q2", 2)
    with pytest.raises(NotArrangedPair):
        q_ell_poly(I, J, 1, 2)
    with pytest.raises(RealComponent):
        q_ell_poly(I, Quaternion(2), 1, 2)
    with pytest.raises(BadIndex):
        q_ell_poly(I, I, 2, 2)


def test_arranged_sphere_examples():
    base = (Quaternion(1, 1), Quaternion(0, 2), Quaternion(3, -1))
    n = 3
    assert vanishes_on_arranged_sphere(sphere_poly(sphere_of(base[2]), 3, n), base)
    real = parse_poly("q1*q2 + 2*q3 - 4", n)
    assert evaluate(real, base) == 0 and real.is_real()
    assert vanishes_on_arranged_sphere(real, base)
    out = vanishes_on_arranged_sphere(SlicePoly.var(1, n) - base[0], base)
    assert not out
    g = Quaternion(1, 0, 1)
    assert evaluate(SlicePoly.var(1, n) - base[0], [conjugate_by(a, g) for a in base]) != 0


def test_arranged_sphere_right_ideal():
    base = (Quaternion(1, 1, 1, 0), Quaternion(2, -1, -1, 0))
    rng = random.Random(8)
    p = q_ell_poly(*base, 1, 2) * random_poly(rng, 2)
    cert = vanishes_on_arranged_sphere(p, base)
    assert cert.is_valid()
    assert vanishes_on_arranged_sphere(p * random_poly(rng, 2), base)
    assert not vanishes_on_arranged_sphere(SlicePoly.constant(K, 2), base)


def test_arranged_sphere_errors():
    with pytest.raises(NotArranged):
        vanishes_on_arranged_sphere(SlicePoly.zero(2), (I, J))
    with pytest.raises(RealComponent):
        vanishes_on_arranged_sphere(SlicePoly.zero(2), (I, Quaternion(1)))
    with pytest.raises(ArityMismatch):
        vanishes_on_arranged_sphere(SlicePoly.zero(2), (I,))


def test_balloon_divisors_and_membership():
    b = Balloon((I, Quaternion(1, 1)), (J,))
    kinds = [d.kind for d in balloon_divisors(b)]
    assert kinds == ["q_ell", "sphere", "linear"]
    rng = random.Random(6)
    p = sum((d.poly * random_poly(rng, 3) for d in balloon_divisors(b)), SlicePoly.zero(3))
    cert = vanishes_on_balloon(p, b)
    assert cert.is_valid()
    for pt in sample_points(cert.target, 20, random.Random(2)):
        assert evaluate(p, pt) == 0
    assert not vanishes_on_balloon(SlicePoly.var(1, 3) - I, b)


def test_point_balloon():
    b = Balloon((), (I, Quaternion(3, 1)))
    assert vanishes_on_balloon(PRODUCT, b)
    assert not vanishes_on_balloon(PRODUCT + 1, b)
    with pytest.raises(InvalidBalloon):
        Balloon((), (I, J))


def test_routes_agree_without_warnings(caplog):
    rng = random.Random(9)
    b = Balloon((Quaternion(0, 1, 2, 2), Quaternion(1, 2, 4, 4)), (Quaternion(0, 0, 0, 1),))
    with caplog.at_level(logging.WARNING, logger="slicereg.vanishing"):
        for _ in range(30):
            vanishes_on_balloon(random_poly(rng, 3), b)
            vanishes_on_sphere_point_set(random_poly(rng, 3), [I], (J, K))
    assert not caplog.records


def test_certificate_json():
    cert = vanishes_on_sphere_product(sphere_poly(sphere_of(I), 1, 1), [I])
    data = cert.to_json()
    assert data["result"] == "vanishing" and data["terms"][0]["divisor"]["text"] == "q^2 + 1"
    neg = decompose_at_point(PRODUCT, (I, J)).to_json()
    assert neg["result"] == "not_vanishing"
    assert neg["witness_value"] == ["0", "0", "0", "2"]
