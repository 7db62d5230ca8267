"""Exact quaternion arithmetic over the rationals.

Quaternions carry four :class:`fractions.Fraction` components (coefficients
of 1, i, j, k).  Nothing here ever rounds; the only square roots needed
(imaginary norms) are taken exactly or refused with :class:`IrrationalNorm`.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import AntipodalDirections, IrrationalNorm, ZeroRotor

RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use 'p/q' strings or Fractions")
    return Fraction(value)


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None when irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def format_rational(r: Fraction) -> str:
    return str(r)


class Quaternion:
    """Immutable quaternion ``w + x i + y j + z k`` with rational parts."""

    __slots__ = ("w", "x", "y", "z", "_hash")

    def __init__(self, w: RationalLike = 0, x: RationalLike = 0,
                 y: RationalLike = 0, z: RationalLike = 0):
        object.__setattr__(self, "w", to_rational(w))
        object.__setattr__(self, "x", to_rational(x))
        object.__setattr__(self, "y", to_rational(y))
        object.__setattr__(self, "z", to_rational(z))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def _raw(cls, w: Fraction, x: Fraction, y: Fraction, z: Fraction) -> Quaternion:
        q = object.__new__(cls)
        object.__setattr__(q, "w", w)
        object.__setattr__(q, "x", x)
        object.__setattr__(q, "y", y)
        object.__setattr__(q, "z", z)
        object.__setattr__(q, "_hash", None)
        return q

    @classmethod
    def coerce(cls, value) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (list, tuple)) and len(value) == 4:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as a quaternion")

    # -- components ------------------------------------------------------

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    @property
    def re(self) -> Fraction:
        return self.w

    @property
    def im(self) -> Quaternion:
        return Quaternion._raw(Fraction(0), self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def is_imaginary(self) -> bool:
        return not self.w

    def norm_sq(self) -> Fraction:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def im_norm_sq(self) -> Fraction:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def conj(self) -> Quaternion:
        return Quaternion._raw(self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> Quaternion:
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion._raw(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def dot(self, other: Quaternion) -> Fraction:
        """Euclidean inner product of the imaginary parts."""
        return self.x * other.x + self.y * other.y + self.z * other.z

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return Quaternion._raw(self.w + other.w, self.x + other.x,
                               self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return Quaternion._raw(self.w - other.w, self.x - other.x,
                               self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion._raw(self.w * other, self.x * other,
                                   self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        # integer kernel over a common denominator; one normalization per part
        D1, (a1, b1, c1, d1) = _scaled(self)
        D2, (a2, b2, c2, d2) = _scaled(other)
        den = D1 * D2
        return Quaternion._raw(
            Fraction(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, den),
            Fraction(a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2, den),
            Fraction(a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, den),
            Fraction(a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2, den),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Quaternion._raw(self.w / other, self.x / other,
                                   self.y / other, self.z / other)
        return NotImplemented

    def __pow__(self, exponent: int) -> Quaternion:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_real() and self.w == other
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.components))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- text / json -----------------------------------------------------

    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        """Full text form ``w+xi+yj+zk``, every component present."""
        out = format_rational(self.w)
        for value, unit in ((self.x, "i"), (self.y, "j"), (self.z, "k")):
            out += ("-" if value < 0 else "+") + format_rational(abs(value)) + unit
        return out

    def short(self) -> str:
        """Compact text form that drops zero components (``0`` for zero)."""
        parts = []
        for value, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if not value:
                continue
            mag = format_rational(abs(value))
            if unit and mag == "1":
                mag = ""
            sign = "-" if value < 0 else "+"
            parts.append((sign, mag + unit))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    _TERM = _re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*([ijk]?)\s*")

    @classmethod
    def parse(cls, text: str) -> Quaternion:
        """Parse the text form, e.g. ``"1/2-3i+0j+2k"`` or ``"-j"``."""
        s = text.strip()
        if not s:
            raise ValueError("empty quaternion text")
        comps = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            sign, num, unit = m.group(1), m.group(2), m.group(3)
            if m.end() == pos or (num is None and not unit):
                raise ValueError(f"bad quaternion text {text!r} at {pos}")
            if not first and not sign:
                raise ValueError(f"missing sign in quaternion text {text!r} at {pos}")
            value = Fraction(num) if num is not None else Fraction(1)
            comps[unit] += -value if sign == "-" else value
            pos = m.end()
            first = False
        return cls(comps[""], comps["i"], comps["j"], comps["k"])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.components]

    @classmethod
    def from_json(cls, data: Sequence) -> Quaternion:
        if isinstance(data, str):
            return cls.parse(data)
        if len(data) != 4:
            raise ValueError("quaternion JSON must have four components")
        return cls(*(to_rational(str(c)) if not isinstance(c, int) else c for c in data))


def _scaled(q: Quaternion) -> tuple[int, tuple[int, int, int, int]]:
    parts = (q.w, q.x, q.y, q.z)
    den = math.lcm(*(f.denominator for f in parts))
    return den, tuple(f.numerator * (den // f.denominator) for f in parts)


def _maybe(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, Fraction)):
        return Quaternion(value)
    return None


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


@dataclass(frozen=True)
class SphereDescriptor:
    """The sphere ``S_a`` stored as ``(Re a, |a|^2)``; a point when a is real."""

    re: Fraction
    norm_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", to_rational(self.re))
        object.__setattr__(self, "norm_sq", to_rational(self.norm_sq))
        if self.norm_sq < self.re * self.re:
            raise ValueError("norm_sq must be at least re**2")

    @property
    def radius_sq(self) -> Fraction:
        return self.norm_sq - self.re * self.re

    def is_degenerate(self) -> bool:
        return self.norm_sq == self.re * self.re

    def rational_point(self, search: int = 12) -> Quaternion | None:
        """Some rational point of the sphere, found by bounded search."""
        r2 = self.radius_sq
        root = rational_sqrt(r2)
        if root is not None:
            return Quaternion(self.re, root)
        # r2 = M / s^2 with M integer; look for M*c^2 = a^2+b^2+d^2.
        den = r2.denominator
        m = r2.numerator * den
        for c in range(1, search + 1):
            target = m * c * c
            a_max = isqrt(target)
            for a in range(a_max, -1, -1):
                rest = target - a * a
                for b in range(isqrt(rest), -1, -1):
                    d2 = rest - b * b
                    d = isqrt(d2)
                    if d * d == d2:
                        scale = Fraction(1, den * c)
                        return Quaternion(self.re, a * scale, b * scale, d * scale)
                    if b * b < d2:
                        break
        return None


def sphere_of(a: Quaternion) -> SphereDescriptor:
    return SphereDescriptor(a.re, a.norm_sq())


def conjugate_by(a: Quaternion, g: Quaternion) -> Quaternion:
    """Return ``g^{-1} a g``."""
    if g.is_zero():
        raise ZeroRotor("rotor must be nonzero")
    if a.is_real():
        return a
    return g.inverse() * a * g


def commutes(a: Quaternion, b: Quaternion) -> bool:
    # ab = ba  iff  Im a x Im b = 0
    return (a.y * b.z - a.z * b.y == 0
            and a.z * b.x - a.x * b.z == 0
            and a.x * b.y - a.y * b.x == 0)


def on_sphere(q: Quaternion, s: SphereDescriptor) -> bool:
    return q.re == s.re and q.norm_sq() == s.norm_sq


def im_ratio(b: Quaternion, c: Quaternion) -> Fraction:
    """The rational ``|Im b| / |Im c|``; raises IrrationalNorm otherwise."""
    ratio = rational_sqrt(b.im_norm_sq() / c.im_norm_sq())
    if ratio is None:
        raise IrrationalNorm(f"|Im {b}| / |Im {c}| is irrational")
    return ratio


def aligner(b: Quaternion, c: Quaternion) -> Quaternion:
    """Rotor g with ``g^{-1} Im(b) g = (|Im b|/|Im c|) Im(c)``.

    The rotor is ``Im(b) + rho * Im(c)`` with ``rho = |Im b|/|Im c|``; it is
    left unnormalized since conjugation ignores positive scaling.  Only the
    ratio of the imaginary norms has to be rational.
    """
    if b.is_real() or c.is_real():
        raise ValueError("aligner needs non-real arguments")
    rho = im_ratio(b, c)
    target = c.im * rho
    g = b.im + target
    if g.is_zero():
        raise AntipodalDirections(
            f"Im({b}) is antipodal to the target direction; use the second rotor"
        )
    return g


def rotor_between(u: Quaternion, v: Quaternion) -> Quaternion:
    """A rotor taking pure imaginary u to pure imaginary v of the same norm.

    Falls back to a rational vector orthogonal to u when u = -v (half turn).
    """
    if u.im_norm_sq() != v.im_norm_sq():
        raise ValueError("rotor_between needs equal norms")
    g = u + v
    if not g.is_zero():
        return g
    for e in (I, J, K):
        cross = _cross(u, e)
        if not cross.is_zero():
            return cross
    raise ZeroRotor("cannot rotate the zero vector")


def _cross(u: Quaternion, v: Quaternion) -> Quaternion:
    return Quaternion(0, u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
                      u.x * v.y - u.y * v.x)


def triple(u: Quaternion, v: Quaternion, w: Quaternion) -> Fraction:
    """Scalar triple product of the imaginary parts."""
    return u.dot(_cross(v, w))


def pairwise_commuting(points: Iterable[Quaternion]) -> bool:
    pts = list(points)
    return all(commutes(pts[r], pts[s])
               for r in range(len(pts)) for s in range(r + 1, len(pts)))
