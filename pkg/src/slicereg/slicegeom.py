"""Spherical sets, balloons, slice frames, splitting and the representation formula."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .errors import (ArityMismatch, InvalidBalloon, InvalidFrame, NegativeShadow,
                     NotArranged, NotOnSlice, ZeroRotor)
from .polyring import SlicePoly, evaluate
from .quatcore import ONE, Quaternion, conjugate_by, pairwise_commuting, triple


def _point(values: Sequence) -> tuple[Quaternion, ...]:
    return tuple(Quaternion.coerce(v) for v in values)


@dataclass(frozen=True)
class SphericalSet:
    """Orbit ``{(g^-1 a1 g, ..., g^-1 an g) : g != 0}`` of a base point."""

    base: tuple[Quaternion, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", _point(self.base))

    @property
    def nvars(self) -> int:
        return len(self.base)

    def is_arranged(self) -> bool:
        return pairwise_commuting(self.base)

    def to_json(self) -> dict:
        return {"base": [a.to_json() for a in self.base]}

    @classmethod
    def from_json(cls, data) -> SphericalSet:
        return cls(tuple(Quaternion.from_json(a) for a in data["base"]))


class ArrangedBase(SphericalSet):
    """Spherical set whose base has pairwise commuting components."""

    def __post_init__(self):
        super().__post_init__()
        if not pairwise_commuting(self.base):
            raise NotArranged("base components must pairwise commute")

    @property
    def components(self) -> tuple[Quaternion, ...]:
        return self.base


@dataclass(frozen=True)
class Balloon:
    """``S_(a1..ak) x {a_(k+1)} x ... x {a_n}`` with commuting head and tail.

    A head component may be real (a "pinched" set).  An empty head is
    allowed and denotes the single point ``tail``.
    """

    head: tuple[Quaternion, ...]
    tail: tuple[Quaternion, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", _point(self.head))
        object.__setattr__(self, "tail", _point(self.tail))
        if not self.head and not self.tail:
            raise InvalidBalloon("balloon needs at least one coordinate")
        if not pairwise_commuting(self.head):
            raise InvalidBalloon("head components must pairwise commute")
        if not pairwise_commuting(self.tail):
            raise InvalidBalloon("tail components must pairwise commute")

    @property
    def k(self) -> int:
        return len(self.head)

    @property
    def nvars(self) -> int:
        return len(self.head) + len(self.tail)

    @property
    def base(self) -> tuple[Quaternion, ...]:
        return self.head + self.tail

    def to_json(self) -> dict:
        return {"head": [a.to_json() for a in self.head],
                "tail": [a.to_json() for a in self.tail]}

    @classmethod
    def from_json(cls, data) -> Balloon:
        return cls(tuple(Quaternion.from_json(a) for a in data["head"]),
                   tuple(Quaternion.from_json(a) for a in data.get("tail", [])))


OrbitLike = Union[SphericalSet, Balloon]


def sample(s: OrbitLike, g: Quaternion) -> tuple[Quaternion, ...]:
    """Rotate the base by ``g``; for a balloon only the head moves."""
    g = Quaternion.coerce(g)
    if g.is_zero():
        raise ZeroRotor("rotor must be nonzero")
    if isinstance(s, Balloon):
        return tuple(conjugate_by(a, g) for a in s.head) + s.tail
    return tuple(conjugate_by(a, g) for a in s.base)


def same_orbit(base: Sequence[Quaternion], p: Sequence[Quaternion]) -> bool:
    """Exact test for ``p`` in the simultaneous-conjugation orbit of ``base``.

    Conjugation acts on imaginary parts as the full rotation group SO(3), so
    the orbit is fixed by the real parts, the Gram matrix of the imaginary
    parts and (for orientation) all their scalar triple products.
    """
    base, p = _point(base), _point(p)
    if len(base) != len(p):
        raise ArityMismatch("points of different lengths")
    n = len(base)
    for a, b in zip(base, p):
        if a.re != b.re:
            return False
    for r in range(n):
        for s in range(r, n):
            if base[r].dot(base[s]) != p[r].dot(p[s]):
                return False
    for r, s, t in combinations(range(n), 3):
        if triple(base[r], base[s], base[t]) != triple(p[r], p[s], p[t]):
            return False
    return True


def membership(s: OrbitLike, p: Sequence) -> bool:
    p = _point(p)
    if len(p) != s.nvars:
        raise ArityMismatch(f"point has {len(p)} coordinates, expected {s.nvars}")
    if isinstance(s, Balloon):
        return p[s.k:] == s.tail and same_orbit(s.head, p[:s.k])
    return same_orbit(s.base, p)


@dataclass(frozen=True)
class SliceFrame:
    """Orthogonal rational imaginary units K, L (basis 1, K, L, KL of H)."""

    K: Quaternion
    L: Quaternion

    def __post_init__(self):
        K, L = Quaternion.coerce(self.K), Quaternion.coerce(self.L)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "L", L)
        if K * K != -ONE or L * L != -ONE:
            raise InvalidFrame("K and L must be imaginary units")
        if not (K * L + L * K).is_zero():
            raise InvalidFrame("K and L must be orthogonal")

    def to_json(self) -> dict:
        return {"K": self.K.to_json(), "L": self.L.to_json()}

    @classmethod
    def from_json(cls, data) -> SliceFrame:
        return cls(Quaternion.from_json(data["K"]), Quaternion.from_json(data["L"]))


def is_unit_imaginary(u: Quaternion) -> bool:
    return u.re == 0 and u.norm_sq() == 1


def slice_coords(z: Quaternion, K: Quaternion) -> tuple[Fraction, Fraction] | None:
    """``(x, y)`` with ``z = x + yK``, or None when z is off the slice C_K."""
    y = z.dot(K)
    if z.im != K * y:
        return None
    return z.re, y


def split_coefficient(a: Quaternion, frame: SliceFrame) -> tuple[Quaternion, Quaternion]:
    """``a = alpha + beta L`` with alpha, beta in C_K (orthonormal basis projection)."""
    K, L = frame.K, frame.L
    KL = K * L
    c0 = a.re
    c1 = a.dot(K)
    c2 = a.dot(L)
    c3 = a.dot(KL)
    return Quaternion(c0) + K * c1, Quaternion(c2) + K * c3


def split(p: SlicePoly, frame: SliceFrame) -> tuple[SlicePoly, SlicePoly]:
    """Splitting ``P(z) = F(z) + G(z) L`` on C_K^n; F, G have C_K coefficients."""
    f_terms, g_terms = {}, {}
    for exp, a in p.items():
        alpha, beta = split_coefficient(a, frame)
        f_terms[exp] = alpha
        g_terms[exp] = beta
    return SlicePoly(p.nvars, f_terms), SlicePoly(p.nvars, g_terms)


def represent(p: SlicePoly, J: Quaternion, K: Quaternion, z: Sequence) -> Quaternion:
    """Value of p at the J-shadows of a point of C_K^n, from values at z and conj(z).

    With ``z_l = x_l + y_l K`` (``y_l >= 0``) and ``w_l = x_l + y_l J``::

        P(w) = (1 - JK)/2 P(z) + (1 + JK)/2 P(conj z)
    """
    J, K = Quaternion.coerce(J), Quaternion.coerce(K)
    if not is_unit_imaginary(J) or not is_unit_imaginary(K):
        raise InvalidFrame("J and K must be imaginary units")
    z = _point(z)
    for zl in z:
        coords = slice_coords(zl, K)
        if coords is None:
            raise NotOnSlice(f"{zl} is not on the slice of {K}")
        if coords[1] < 0:
            raise NegativeShadow(f"{zl} has negative K-coordinate")
    JK = J * K
    half = Fraction(1, 2)
    left = (ONE - JK) * half
    right = (ONE + JK) * half
    return left * evaluate(p, z) + right * evaluate(p, tuple(zl.conj() for zl in z))


def shadow(z: Quaternion, K: Quaternion, J: Quaternion) -> Quaternion:
    """Move ``x + yK`` to ``x + yJ``."""
    coords = slice_coords(z, K)
    if coords is None:
        raise NotOnSlice(f"{z} is not on the slice of {K}")
    x, y = coords
    return Quaternion(x) + J * y
