import itertools

import pytest
from hypothesis import given, settings

from slicereg import (I, J, K, ONE, ArrangedBase, Balloon, Quaternion, SliceFrame,
                      SlicePoly, SphericalSet, conjugate_by, evaluate, membership,
                      represent, sample, split)
from slicereg.errors import (InvalidBalloon, InvalidFrame, NegativeShadow, NotArranged,
                             NotOnSlice, ZeroRotor)
from slicereg.parser import parse_poly
from slicereg.slicegeom import same_orbit, shadow, slice_coords
from strategies import nonzero_quaternions, polys, rationals


def rotor_search(base, p, bound=2):
    """Brute force over integer rotors with entries in [-bound, bound]."""
    for comps in itertools.product(range(-bound, bound + 1), repeat=4):
        g = Quaternion(*comps)
        if not g.is_zero() and tuple(conjugate_by(a, g) for a in base) == tuple(p):
            return g
    return None


def test_sample_examples():
    s = SphericalSet((I, Quaternion(1, 1)))
    assert sample(s, J) == (-I, Quaternion(1, -1))
    assert sample(s, ONE) == s.base
    reals = SphericalSet((Quaternion(2), Quaternion(-1)))
    assert sample(reals, Quaternion(1, 2, 3, 4)) == reals.base
    with pytest.raises(ZeroRotor):
        sample(s, Quaternion(0))


def test_membership_examples():
    s = SphericalSet((I, J))
    g = Quaternion(1, 0, 0, 1)
    assert membership(s, sample(s, g))
    assert not membership(SphericalSet((I, Quaternion(1, 1))), (I, Quaternion(1, 2)))
    # i conjugates (i, j) to (i, -j)
    assert membership(s, (I, -J))
    assert rotor_search((I, J), (I, -J)) is not None


def test_membership_orientation():
    s = SphericalSet((I, J, K))
    assert not membership(s, (I, J, -K))
    assert rotor_search((I, J, K), (I, J, -K)) is None
    assert membership(s, (J, K, I))


@settings(max_examples=40)
@given(nonzero_quaternions)
def test_membership_agrees_with_rotor_search(g):
    base = (Quaternion(1, 1, 2), Quaternion(0, 0, 1, -1), Quaternion(2, 1, 0, 1))
    assert membership(SphericalSet(base), sample(SphericalSet(base), g))


def test_balloon_validation():
    with pytest.raises(InvalidBalloon):
        Balloon((I, J), ())
    with pytest.raises(InvalidBalloon):
        Balloon((I,), (I, J))
    with pytest.raises(InvalidBalloon):
        Balloon((), ())
    b = Balloon((I, Quaternion(2)), (J,))
    assert b.k == 2 and b.nvars == 3
    assert Balloon.from_json(b.to_json()) == b
    assert membership(b, (J, Quaternion(2), J))
    assert not membership(b, (J, Quaternion(2), K))
    with pytest.raises(NotArranged):
        ArrangedBase((I, J))


def test_frame_validation():
    SliceFrame(I, J)
    with pytest.raises(InvalidFrame):
        SliceFrame(I, I)
    with pytest.raises(InvalidFrame):
        SliceFrame(I, J * 2)


def test_split_examples():
    frame = SliceFrame(I, J)
    p = parse_poly("q1*(1+2i) - i", 1)
    f, g = split(p, frame)
    assert f == p and g.is_zero()
    f, g = split(SlicePoly.constant(K, 1), frame)
    assert f.is_zero() and g == SlicePoly.constant(I, 1)


@settings(max_examples=50)
@given(polys(2, max_deg=3), rationals, rationals, rationals, rationals, nonzero_quaternions)
def test_splitting_identity(p, x1, y1, x2, y2, g):
    frame = SliceFrame(conjugate_by(I, g), conjugate_by(J, g))
    z = (Quaternion(x1) + frame.K * y1, Quaternion(x2) + frame.K * y2)
    f, h = split(p, frame)
    assert evaluate(p, z) == evaluate(f, z) + evaluate(h, z) * frame.L
    assert f + h * frame.L == p


def test_representation_examples():
    assert represent(SlicePoly.var(1, 1), J, I, (Quaternion(1, 2),)) == Quaternion(1, 0, 2)
    p = parse_poly("q1^2*q2*j + q2 - k", 2)
    z = (Quaternion(1, 2), Quaternion(0, 3))
    assert represent(p, I, I, z) == evaluate(p, z)
    with pytest.raises(NotOnSlice):
        represent(p, J, I, (J, I))
    with pytest.raises(NegativeShadow):
        represent(p, J, I, (Quaternion(0, -1), I))
    with pytest.raises(InvalidFrame):
        represent(p, J * 2, I, z)


@settings(max_examples=50)
@given(polys(2, max_deg=3), rationals, rationals, rationals, rationals)
def test_representation_formula(p, x1, y1, x2, y2):
    z = (Quaternion(x1, abs(y1)), Quaternion(x2, abs(y2)))
    w = tuple(shadow(c, I, J) for c in z)
    assert represent(p, J, I, z) == evaluate(p, w)


def test_slice_coords():
    assert slice_coords(Quaternion(1, 2), I) == (1, 2)
    assert slice_coords(J, I) is None
    assert same_orbit((I,), (J,))
