"""Vanishing certificates for structured subsets of H^n.

Each decision procedure divides by polynomials that vanish on the target set
(linear ``q_m - a``, spherical ``S_a(q_m)``, or the two-variable real
polynomials ``Q_l``) and accepts iff the final remainder is zero.  A positive
answer is a :class:`VanishingCertificate` with

    P = sum_i divisor_i * cofactor_i + residual,   residual == 0.

A negative answer is a :class:`NotVanishing` carrying the nonzero residual
and, when one is found, a rational point of the set where P does not vanish.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .division import div_monic, reduce_chain
from .errors import (ArityMismatch, BadIndex, DegenerateSphere, InvalidBalloon,
                     NotArranged, NotArrangedPair, RealComponent)
from .polyring import SlicePoly, evaluate, linear_poly, sphere_poly, substitute_tail
from .quatcore import (Quaternion, SphereDescriptor, commutes,
                       conjugate_by, pairwise_commuting, sphere_of)
from .slicegeom import ArrangedBase, Balloon, sample

log = logging.getLogger(__name__)

LINEAR, SPHERE, Q_ELL = "linear", "sphere", "q_ell"


@dataclass(frozen=True)
class Divisor:
    poly: SlicePoly
    var: int
    kind: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "var": self.var, "poly": self.poly.to_json(),
                "text": str(self.poly)}


# -- target sets -------------------------------------------------------------

def _rand_rotor(rng: random.Random) -> Quaternion:
    while True:
        g = Quaternion(*(rng.randint(-3, 3) for _ in range(4)))
        if not g.is_zero():
            return g


def _rand_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(*(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)))


def _sphere_rep(s: SphereDescriptor, given: Quaternion | None) -> Quaternion | None:
    return given if given is not None else s.rational_point()


@dataclass(frozen=True)
class PointTarget:
    point: tuple[Quaternion, ...]
    kind = "point"

    def sample(self, rng):
        return self.point

    def to_json(self):
        return {"kind": self.kind, "point": [a.to_json() for a in self.point]}


@dataclass(frozen=True)
class SlabTarget:
    """``H^(m-1) x {a} x (C_a)^(n-m)``."""
    a: Quaternion
    m: int
    nvars: int
    kind = "slab"

    def sample(self, rng):
        pt = [_rand_quaternion(rng) for _ in range(self.m - 1)] + [self.a]
        for _ in range(self.nvars - self.m):
            if self.a.is_real():
                pt.append(_rand_quaternion(rng))
            else:
                pt.append(Quaternion(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
                          + self.a.im * Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        return tuple(pt)

    def to_json(self):
        return {"kind": self.kind, "a": self.a.to_json(), "m": self.m, "nvars": self.nvars}


@dataclass(frozen=True)
class SphereProductTarget:
    """``S_a1 x ... x S_ak x T`` with T either ``H^(n-k)`` or a fixed tail point."""
    spheres: tuple[SphereDescriptor, ...]
    reps: tuple[Quaternion | None, ...]
    nvars: int
    tail: tuple[Quaternion, ...] | None = None

    @property
    def kind(self):
        return "sphere_product" if self.tail is None else "sphere_point"

    def sample(self, rng):
        pt = []
        for rep in self.reps:
            if rep is None:
                return None
            pt.append(conjugate_by(rep, _rand_rotor(rng)))
        if self.tail is None:
            pt.extend(_rand_quaternion(rng) for _ in range(self.nvars - len(self.spheres)))
        else:
            pt.extend(self.tail)
        return tuple(pt)

    def to_json(self):
        out = {"kind": self.kind,
               "spheres": [{"re": str(s.re), "norm_sq": str(s.norm_sq)} for s in self.spheres],
               "nvars": self.nvars}
        if self.tail is not None:
            out["tail"] = [a.to_json() for a in self.tail]
        return out


@dataclass(frozen=True)
class ArrangedTarget:
    base: ArrangedBase
    kind = "arranged_sphere"

    def sample(self, rng):
        return sample(self.base, _rand_rotor(rng))

    def to_json(self):
        return {"kind": self.kind, **self.base.to_json()}


@dataclass(frozen=True)
class BalloonTarget:
    balloon: Balloon
    kind = "balloon"

    def sample(self, rng):
        return sample(self.balloon, _rand_rotor(rng))

    def to_json(self):
        return {"kind": self.kind, **self.balloon.to_json()}


Target = Union[PointTarget, SlabTarget, SphereProductTarget, ArrangedTarget, BalloonTarget]


def sample_points(target: Target, count: int, rng: random.Random | None = None) -> list:
    """Rational points of the target set (fewer if none can be produced)."""
    rng = rng or random.Random(0)
    out = []
    for _ in range(count):
        p = target.sample(rng)
        if p is None:
            break
        out.append(p)
    return out


# -- results -----------------------------------------------------------------

@dataclass(frozen=True)
class VanishingCertificate:
    original: SlicePoly
    target: Target
    divisors: tuple[Divisor, ...]
    cofactors: tuple[SlicePoly, ...]
    residual: SlicePoly
    shape: str = ""

    def __bool__(self):
        return True

    def reconstruct(self) -> SlicePoly:
        total = self.residual
        for d, c in zip(self.divisors, self.cofactors):
            total = total + d.poly * c
        return total

    def is_valid(self) -> bool:
        return self.residual.is_zero() and self.reconstruct() == self.original

    def to_json(self) -> dict:
        return {
            "result": "vanishing",
            "shape": self.shape,
            "target": self.target.to_json(),
            "polynomial": self.original.to_json(),
            "terms": [{"divisor": d.to_json(), "cofactor": c.to_json(), "cofactor_text": str(c)}
                      for d, c in zip(self.divisors, self.cofactors)],
            "residual": self.residual.to_json(),
        }


@dataclass(frozen=True)
class NotVanishing:
    target: Target
    residual: SlicePoly | None = None
    point: tuple[Quaternion, ...] | None = None
    value: Quaternion | None = None

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        out = {"result": "not_vanishing", "target": self.target.to_json()}
        if self.residual is not None:
            out["residual"] = self.residual.to_json()
            out["residual_text"] = str(self.residual)
        if self.point is not None:
            out["witness_point"] = [a.to_json() for a in self.point]
            out["witness_value"] = self.value.to_json()
        return out


def _witness(p: SlicePoly, target: Target, tries: int = 64):
    rng = random.Random(0x5EED)
    for _ in range(tries):
        pt = target.sample(rng)
        if pt is None:
            return None, None
        v = evaluate(p, pt)
        if not v.is_zero():
            return pt, v
    return None, None


def _not_vanishing(p: SlicePoly, target: Target, residual: SlicePoly) -> NotVanishing:
    pt, v = _witness(p, target)
    return NotVanishing(target, residual=residual, point=pt, value=v)


def _run_chain(p: SlicePoly, divisors: list[Divisor], target: Target, shape: str):
    cofactors, rem = reduce_chain(p, [(d.poly, d.var) for d in divisors])
    return VanishingCertificate(p, target, tuple(divisors), tuple(cofactors), rem, shape)


# -- building blocks ---------------------------------------------------------

def q_ell_poly(a, b, ell: int, nvars: int, partner: int | None = None) -> SlicePoly:
    """Real polynomial ``q_ell + gamma q_partner + delta`` vanishing at (a, b).

    ``a`` and ``b`` must be non-real and commute, so ``Im a = t Im b`` for a
    rational t; then ``gamma = -t`` and ``delta = -Re a + t Re b``.  The
    partner variable defaults to ``ell + 1``.
    """
    a, b = Quaternion.coerce(a), Quaternion.coerce(b)
    partner = ell + 1 if partner is None else partner
    if not (1 <= ell < partner <= nvars):
        raise BadIndex(f"need 1 <= {ell} < {partner} <= {nvars}")
    if a.is_real() or b.is_real():
        raise RealComponent("Q_l needs non-real components")
    if not commutes(a, b):
        raise NotArrangedPair(f"{a} and {b} do not commute")
    t = a.dot(b) / b.im_norm_sq()
    return (SlicePoly.var(ell, nvars) - SlicePoly.var(partner, nvars) * t
            + (t * b.re - a.re))


def _head_divisors(head: Sequence[Quaternion], nvars: int) -> list[Divisor]:
    """Divisors for an arranged (possibly pinched) head in variables 1..k."""
    out = []
    nonreal = [i for i, a in enumerate(head) if not a.is_real()]
    for i, a in enumerate(head):
        m = i + 1
        if a.is_real():
            out.append(Divisor(linear_poly(a, m, nvars), m, LINEAR))
            continue
        later = [r for r in nonreal if r > i]
        if later:
            r = later[0]
            out.append(Divisor(q_ell_poly(a, head[r], m, nvars, partner=r + 1), m, Q_ELL))
        else:
            out.append(Divisor(sphere_poly(sphere_of(a), m, nvars), m, SPHERE))
    return out


def _coerce_spheres(spheres) -> tuple[tuple[SphereDescriptor, ...], tuple]:
    descs, reps = [], []
    for s in spheres:
        if isinstance(s, SphereDescriptor):
            descs.append(s)
            reps.append(None)
        else:
            q = Quaternion.coerce(s)
            descs.append(sphere_of(q))
            reps.append(q)
    for s in descs:
        if s.is_degenerate():
            raise DegenerateSphere(f"sphere {s} is a single real point")
    reps = tuple(_sphere_rep(s, r) for s, r in zip(descs, reps))
    return tuple(descs), reps


# -- decision procedures -----------------------------------------------------

def decompose_at_point(p: SlicePoly, a: Sequence):
    """``P = sum_k (q_k - a_k) * P_k(q_1..q_k)`` iff ``P(a) = 0``."""
    a = tuple(Quaternion.coerce(c) for c in a)
    if len(a) != p.nvars:
        raise ArityMismatch(f"point has {len(a)} coordinates, expected {p.nvars}")
    n = p.nvars
    divisors = [Divisor(linear_poly(a[m - 1], m, n), m, LINEAR) for m in range(n, 0, -1)]
    target = PointTarget(a)
    cert = _run_chain(p, divisors, target, "point")
    if cert.residual.is_zero():
        return cert
    return NotVanishing(target, residual=cert.residual, point=a,
                        value=cert.residual.constant_term())


def factor_slab(p: SlicePoly, a, m: int):
    """Cofactor ``P_m`` with ``P = (q_m - a) * P_m``, iff P vanishes on the slab."""
    a = Quaternion.coerce(a)
    q, r = div_monic(p, linear_poly(a, m, p.nvars), m)
    if r.is_zero():
        return q
    return _not_vanishing(p, SlabTarget(a, m, p.nvars), r)


def vanishes_on_sphere_product(p: SlicePoly, spheres: Sequence):
    """Decide vanishing on ``S_a1 x ... x S_ak x H^(n-k)`` (spheres over q_1..q_k)."""
    descs, reps = _coerce_spheres(spheres)
    k = len(descs)
    if not 1 <= k <= p.nvars:
        raise ArityMismatch(f"{k} spheres for {p.nvars} variables")
    divisors = [Divisor(sphere_poly(s, l + 1, p.nvars), l + 1, SPHERE)
                for l, s in enumerate(descs)]
    target = SphereProductTarget(descs, reps, p.nvars)
    cert = _run_chain(p, divisors, target, "sphere_product")
    if cert.residual.is_zero():
        return cert
    return _not_vanishing(p, target, cert.residual)


def vanishes_on_sphere_point_set(p: SlicePoly, spheres: Sequence, tail: Sequence):
    """Decide vanishing on ``S_a1 x ... x S_ak x {a_(k+1)} x ... x {a_n}``.

    The decision freezes the tail and tests the sphere product.  The
    certificate divides by the spheres first and then the tail linear factors
    when the tail commutes pairwise; otherwise the tail linear factors go
    first, so their cofactors only involve q_1..q_l.
    """
    descs, reps = _coerce_spheres(spheres)
    tail = tuple(Quaternion.coerce(c) for c in tail)
    k, n = len(descs), p.nvars
    if k < 1 or k + len(tail) != n:
        raise ArityMismatch(f"{k} spheres and tail of {len(tail)} for {n} variables")
    target = SphereProductTarget(descs, reps, n, tail)

    head_poly = substitute_tail(p, k, tail) if tail else p
    decided = vanishes_on_sphere_product(head_poly, descs)

    sphere_divs = [Divisor(sphere_poly(s, l + 1, n), l + 1, SPHERE) for l, s in enumerate(descs)]
    if pairwise_commuting(tail):
        linear = [Divisor(linear_poly(tail[l - k - 1], l, n), l, LINEAR) for l in range(k + 1, n + 1)]
        cert = _run_chain(p, sphere_divs + linear, target, "spheres_then_linear")
    else:
        linear = [Divisor(linear_poly(tail[l - k - 1], l, n), l, LINEAR) for l in range(n, k, -1)]
        cert = _run_chain(p, linear + sphere_divs, target, "linear_then_spheres")
    if bool(decided) != cert.residual.is_zero():
        log.warning("direct chain and frozen-tail decision disagree for %s", p)
    if decided:
        if cert.residual.is_zero():
            return cert
        linear = [Divisor(linear_poly(tail[l - k - 1], l, n), l, LINEAR) for l in range(n, k, -1)]
        return _run_chain(p, linear + sphere_divs, target, "linear_then_spheres")
    return _not_vanishing(p, target, cert.residual)


def _arranged_decision(head_poly: SlicePoly, head: Sequence[Quaternion]) -> bool:
    _, rem = reduce_chain(head_poly, [(d.poly, d.var) for d in
                                      _head_divisors(head, head_poly.nvars)])
    return rem.is_zero()


def vanishes_on_arranged_sphere(p: SlicePoly, base: Sequence):
    """Decide vanishing on the arranged spherical set through ``base``.

    Divides by ``Q_1, ..., Q_(n-1)`` and finally ``S_(a_n)(q_n)``.
    """
    if isinstance(base, ArrangedBase):
        arranged = base
    else:
        pts = tuple(Quaternion.coerce(c) for c in base)
        if not pairwise_commuting(pts):
            raise NotArranged("base components must pairwise commute")
        arranged = ArrangedBase(pts)
    comps = arranged.base
    if len(comps) != p.nvars:
        raise ArityMismatch(f"base has {len(comps)} coordinates, expected {p.nvars}")
    if any(a.is_real() for a in comps):
        raise RealComponent("arranged base components must be non-real")
    target = ArrangedTarget(arranged)
    cert = _run_chain(p, _head_divisors(comps, p.nvars), target, "arranged_sphere")
    if cert.residual.is_zero():
        return cert
    return _not_vanishing(p, target, cert.residual)


def balloon_divisors(b: Balloon) -> list[Divisor]:
    """Head chain ``Q_1..Q_(k-1), S_(a_k)`` followed by the tail linear factors."""
    n = b.nvars
    divs = _head_divisors(b.head, n)
    divs += [Divisor(linear_poly(a, b.k + i + 1, n), b.k + i + 1, LINEAR)
             for i, a in enumerate(b.tail)]
    return divs


def vanishes_on_balloon(p: SlicePoly, b: Balloon):
    """Decide vanishing on a balloon; right ideal of such P is closed under ``*R``."""
    if not isinstance(b, Balloon):
        raise InvalidBalloon("expected a Balloon")
    if b.nvars != p.nvars:
        raise InvalidBalloon(f"balloon has {b.nvars} coordinates, polynomial {p.nvars} variables")
    target = BalloonTarget(b)
    if b.k == 0:
        decided = evaluate(p, b.tail).is_zero()
    else:
        head_poly = substitute_tail(p, b.k, b.tail) if b.tail else p
        decided = _arranged_decision(head_poly, b.head)
    cert = _run_chain(p, balloon_divisors(b), target, "balloon")
    if decided != cert.residual.is_zero():
        log.warning("direct balloon chain and frozen-tail decision disagree for %s", p)
    if decided:
        if cert.residual.is_zero():
            return cert
        n = b.nvars
        tail_first = [Divisor(linear_poly(b.tail[l - b.k - 1], l, n), l, LINEAR)
                      for l in range(n, b.k, -1)]
        return _run_chain(p, tail_first + _head_divisors(b.head, n), target, "balloon_tail_first")
    return _not_vanishing(p, target, cert.residual)
