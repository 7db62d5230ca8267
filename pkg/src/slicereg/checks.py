"""Seeded property checks, one per acceptance criterion.

Each check draws its own random instances, computes expected values by an
independent route (explicit formulas, pointwise evaluation, sampling), and
returns a :class:`CheckResult`.  ``slicereg selftest`` and the acceptance
tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .division import div_monic, double_remainder
from .ideals import (RightIdeal, enlarge_zero, full_set, empty_set, intersect, leaf, slice_set, union)
from .parser import parse_poly
from .polyring import SlicePoly, eval_star_product, evaluate, random_poly
from .quatcore import (I, J, K, ONE, Quaternion, commutes, conjugate_by,
                       rational_sqrt)
from .slicegeom import Balloon, SliceFrame, represent, same_orbit, slice_coords, split
from .vanishing import (decompose_at_point, factor_slab, q_ell_poly,
                        vanishes_on_arranged_sphere, vanishes_on_balloon,
                        vanishes_on_sphere_point_set, vanishes_on_sphere_product)


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool = True
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 5:
            self.failures.append(message)

    def expect(self, condition: bool, message: str) -> None:
        if not condition:
            self.fail(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.number:2d}. {self.title} ({self.instances} instances, {self.seconds:.1f}s)"
        for f in self.failures:
            text += f"\n       {f}"
        return text


# -- random instance helpers --------------------------------------------------

def rand_rat(rng: random.Random, size: int = 4, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, den))


def rand_nonzero_rat(rng: random.Random, size: int = 4, den: int = 3) -> Fraction:
    while True:
        r = rand_rat(rng, size, den)
        if r:
            return r


def rand_quat(rng: random.Random) -> Quaternion:
    return Quaternion(*(rand_rat(rng) for _ in range(4)))


def rand_rotor(rng: random.Random) -> Quaternion:
    while True:
        g = Quaternion(*(rng.randint(-3, 3) for _ in range(4)))
        if not g.is_zero():
            return g


def rand_direction(rng: random.Random) -> Quaternion:
    while True:
        u = Quaternion(0, *(rng.randint(-2, 2) for _ in range(3)))
        if not u.is_zero():
            return u


def rand_unit(rng: random.Random) -> Quaternion:
    """A rational imaginary unit (a rotated copy of i)."""
    return conjugate_by(I, rand_rotor(rng))


def on_slice(rng: random.Random, u: Quaternion, nonreal: bool = True) -> Quaternion:
    s = rand_nonzero_rat(rng) if nonreal else rand_rat(rng)
    return Quaternion(rand_rat(rng)) + u * s


def rand_poly(rng: random.Random, nvars: int, upto: int | None = None,
              max_deg: int = 2, max_terms: int = 2) -> SlicePoly:
    """Random polynomial in q_1..q_upto, embedded in nvars variables."""
    k = nvars if upto is None else upto
    return random_poly(rng, k, max_deg=max_deg, max_terms=max_terms).extend(nvars)


def sphere_oracle(a: Quaternion, m: int, n: int) -> SlicePoly:
    """``q_m^2 - 2 Re(a) q_m + |a|^2`` written out term by term."""
    def e(power):
        exp = [0] * n
        exp[m - 1] = power
        return tuple(exp)
    return SlicePoly(n, {e(2): ONE, e(1): Quaternion(-2 * a.re), e(0): Quaternion(a.norm_sq())})


def q_ell_oracle(a: Quaternion, b: Quaternion, ell: int, n: int) -> SlicePoly:
    """Q_ell from norms: gamma = -+|Im a|/|Im b|, sign by orientation of Im a vs Im b."""
    ratio = rational_sqrt(a.im_norm_sq() / b.im_norm_sq())
    if ratio is None:
        raise ValueError("norm ratio is irrational")
    t = ratio if a.dot(b) > 0 else -ratio
    return (SlicePoly.var(ell, n) - SlicePoly.var(ell + 1, n) * t
            + Quaternion(t * b.re - a.re))


def _combine(rng, divisors, cofactor_vars, n):
    total = SlicePoly.zero(n)
    for d, upto in zip(divisors, cofactor_vars):
        total = total + d * rand_poly(rng, n, upto)
    return total


# -- checks -------------------------------------------------------------------

def check_ring_axioms(rng: random.Random) -> CheckResult:
    res = CheckResult(1, "*-ring axioms")
    for _ in range(500):
        n = rng.randint(1, 3)
        p, q, r = (random_poly(rng, n, max_deg=3, max_terms=4) for _ in range(3))
        res.expect((p * q) * r == p * (q * r), f"associativity: {p} | {q} | {r}")
        res.expect(p * (q + r) == p * q + p * r, f"left distributivity: {p} | {q} | {r}")
        res.expect((p + q) * r == p * r + q * r, f"right distributivity: {p} | {q} | {r}")
        res.instances += 1
    for _ in range(200):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, max_deg=3, max_terms=4, real=True)
        q = random_poly(rng, n, max_deg=3, max_terms=4)
        res.expect(p * q == q * p, f"real commutation: {p} | {q}")
        res.instances += 1
    return res


def check_product_identity(rng: random.Random) -> CheckResult:
    res = CheckResult(2, "(q1-i)*(q2-j) identity and zero set")
    p = parse_poly("(q1 - i)*(q2 - j)", 2)
    expected = SlicePoly(2, {(1, 1): ONE, (1, 0): -J, (0, 1): -I, (0, 0): K})
    res.expect(p == expected, f"expansion gave {p}")
    res.expect(str(p) == "q1*q2 - q1*j - q2*i + k", f"printed as {p}")
    for _ in range(20):
        z = Quaternion(rand_rat(rng), rand_rat(rng))
        res.expect(evaluate(p, (I, z)).is_zero(), f"nonzero at (i, {z})")
        res.instances += 1
    for _ in range(20):
        z = rand_quat(rng)
        while z.components[2] == 0 and z.components[3] == 0:
            z = rand_quat(rng)
        res.expect(not evaluate(p, (I, z)).is_zero(), f"zero at (i, {z})")
        res.instances += 1
    return res


def check_star_evaluation(rng: random.Random) -> CheckResult:
    res = CheckResult(3, "eval_star_product = eval o star_mul")
    for _ in range(300):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, max_deg=2, max_terms=3)
        q = random_poly(rng, n, max_deg=2, max_terms=3)
        u = rand_direction(rng)
        pt = tuple(on_slice(rng, u, nonreal=rng.random() < 0.8) for _ in range(n))
        res.expect(eval_star_product(p, q, pt) == evaluate(p * q, pt), f"{p} | {q} at {pt}")
        res.instances += 1
    return res


def _monic(rng: random.Random, n: int, m: int) -> SlicePoly:
    d = rng.randint(1, 2)
    exp = [0] * n
    exp[m - 1] = d
    total = SlicePoly.monomial(exp)
    for power in range(d):
        low = random_poly(rng, n, max_deg=1, max_terms=2)
        low = SlicePoly(n, {e: c for e, c in low.items() if e[m - 1] == 0})
        total = total + SlicePoly.var(m, n) ** power * low
    return total


def check_division(rng: random.Random) -> CheckResult:
    res = CheckResult(4, "monic division and double remainder")
    for _ in range(300):
        n = rng.randint(1, 3)
        m = rng.randint(1, n)
        mon = _monic(rng, n, m)
        d = mon.deg_in(m)
        p = random_poly(rng, n, max_deg=3, max_terms=4)
        q1, r1 = div_monic(p, mon, m)
        res.expect(mon * q1 + r1 == p, f"reconstruction: {p} by {mon}")
        res.expect(r1.deg_in(m) < d, f"degree bound: remainder {r1}")
        x = random_poly(rng, n, max_deg=2, max_terms=2)
        q2, r2 = div_monic(p + mon * x, mon, m)
        res.expect(q2 == q1 + x and r2 == r1, f"uniqueness: {p} by {mon}")
        qd, rd = div_monic(r1 - r2, mon, m)
        res.expect(qd.is_zero() and rd == r1 - r2, "difference re-division")
        res.instances += 1
    for _ in range(100):
        n = rng.randint(2, 3)
        m, ell = rng.sample(range(1, n + 1), 2)
        first = _monic(rng, n, m)
        second = _monic(rng, n, ell)
        second = SlicePoly(n, {e: c for e, c in second.items() if e[m - 1] == 0})
        p = random_poly(rng, n, max_deg=3, max_terms=4)
        t = double_remainder(p, first, second, m, ell)
        res.expect(t.deg_in(m) < first.deg_in(m), f"double remainder q{m}-degree: {t}")
        res.expect(t.deg_in(ell) < second.deg_in(ell), f"double remainder q{ell}-degree: {t}")
        res.instances += 1
    return res


# vanishing targets: (member polynomial, decide, divisors, sampler)

def _target_point(rng, n):
    a = tuple(rand_quat(rng) for _ in range(n))
    divs = [SlicePoly.var(k, n) - a[k - 1] for k in range(1, n + 1)]
    member = _combine(rng, divs, range(1, n + 1), n)
    return member, (lambda p: decompose_at_point(p, a)), lambda r: a, _view


def _target_slab(rng, n):
    a = rand_quat(rng)
    m = rng.randint(1, n)
    div = SlicePoly.var(m, n) - a

    def sampler(r):
        pt = [rand_quat(r) for _ in range(m - 1)] + [a]
        pt += [Quaternion(rand_rat(r)) + a.im * rand_rat(r) for _ in range(n - m)]
        return tuple(pt)
    def view(p, cofactor):
        # a slab answer is the bare cofactor of q_m - a
        return div * cofactor == p, [div]
    return div * rand_poly(rng, n), (lambda p: factor_slab(p, a, m)), sampler, view


def _target_sphere_product(rng, n):
    k = rng.randint(1, n)
    reps = [on_slice(rng, rand_direction(rng)) for _ in range(k)]
    divs = [sphere_oracle(a, l + 1, n) for l, a in enumerate(reps)]
    member = _combine(rng, divs, [None] * k, n)

    def sampler(r):
        return tuple(conjugate_by(a, rand_rotor(r)) for a in reps) + \
            tuple(rand_quat(r) for _ in range(n - k))
    return member, (lambda p: vanishes_on_sphere_product(p, reps)), sampler, _view


def _target_sphere_point(rng, n):
    n = max(n, 2)
    k = rng.randint(1, n - 1)
    reps = [on_slice(rng, rand_direction(rng)) for _ in range(k)]
    if rng.random() < 0.5:
        tail = tuple(rand_quat(rng) for _ in range(n - k))
    else:
        w = rand_direction(rng)
        tail = tuple(on_slice(rng, w, nonreal=False) for _ in range(n - k))
    divs = [sphere_oracle(a, l + 1, n) for l, a in enumerate(reps)]
    divs += [SlicePoly.var(l, n) - tail[l - k - 1] for l in range(k + 1, n + 1)]
    member = _combine(rng, divs, [None] * k + list(range(k + 1, n + 1)), n)

    def sampler(r):
        return tuple(conjugate_by(a, rand_rotor(r)) for a in reps) + tail
    return member, (lambda p: vanishes_on_sphere_point_set(p, reps, tail)), sampler, _view


def _target_arranged(rng, n):
    u = rand_direction(rng)
    base = tuple(on_slice(rng, u) for _ in range(n))
    divs = []
    for ell in range(1, n):
        a, b = base[ell - 1], base[ell]
        try:
            divs.append(q_ell_oracle(a, b, ell, n))
        except ValueError:
            divs.append(q_ell_poly(a, b, ell, n))
    divs.append(sphere_oracle(base[-1], n, n))
    member = _combine(rng, divs, [None] * n, n)

    def sampler(r):
        g = rand_rotor(r)
        return tuple(conjugate_by(a, g) for a in base)
    return member, (lambda p: vanishes_on_arranged_sphere(p, base)), sampler, _view


def rand_balloon(rng: random.Random, n: int) -> Balloon:
    """Balloon with non-real head in one slice and a tail in another."""
    n = max(n, 2)
    k = rng.randint(1, n - 1)
    u = rand_direction(rng)
    w = rand_direction(rng)
    while commutes(u, w):
        w = rand_direction(rng)
    head = tuple(on_slice(rng, u) for _ in range(k))
    tail = (on_slice(rng, w),) + tuple(on_slice(rng, w, nonreal=False) for _ in range(n - k - 1))
    return Balloon(head, tail)


def _target_balloon(rng, n):
    b = rand_balloon(rng, n)
    n, k = b.nvars, b.k
    divs = []
    for ell in range(1, k):
        divs.append(q_ell_poly(b.head[ell - 1], b.head[ell], ell, n))
    divs.append(sphere_oracle(b.head[-1], k, n))
    divs += [SlicePoly.var(l, n) - b.tail[l - k - 1] for l in range(k + 1, n + 1)]
    member = _combine(rng, divs, [None] * n, n)

    def sampler(r):
        g = rand_rotor(r)
        return tuple(conjugate_by(a, g) for a in b.head) + b.tail
    return member, (lambda p: vanishes_on_balloon(p, b)), sampler, _view


TARGETS = {
    "point": _target_point,
    "slab": _target_slab,
    "sphere product": _target_sphere_product,
    "sphere x point": _target_sphere_point,
    "arranged sphere": _target_arranged,
    "balloon": _target_balloon,
}


def _view(p, outcome):
    """(reconstructs exactly, divisor polynomials) for a positive answer."""
    return outcome.is_valid(), [d.poly for d in outcome.divisors]


def check_vanishing(rng: random.Random, count: int = 200, samples: int = 20) -> CheckResult:
    res = CheckResult(5, "vanishing certificates on six set families")
    for kind, make in TARGETS.items():
        members = rejected = 0
        while members < count:
            n = rng.randint(1, 3)
            p, decide, sampler, view = make(rng, n)
            if p.is_zero():
                continue
            outcome = decide(p)
            members += 1
            res.instances += 1
            if not outcome:
                res.fail(f"{kind}: member rejected: {p}")
                continue
            ok, divisors = view(p, outcome)
            res.expect(ok, f"{kind}: certificate does not reconstruct {p}")
            srng = random.Random(rng.random())
            for _ in range(samples):
                pt = sampler(srng)
                res.expect(evaluate(p, pt).is_zero(), f"{kind}: member nonzero at {pt}")
                for d in divisors:
                    res.expect(evaluate(d, pt).is_zero(), f"{kind}: divisor {d} nonzero at {pt}")
        while rejected < count:
            n = rng.randint(1, 3)
            p, decide, sampler, view = make(rng, n)
            other = random_poly(rng, p.nvars, max_deg=3, max_terms=3)
            if other.is_zero():
                continue
            srng = random.Random(rng.random())
            if not any(not evaluate(other, sampler(srng)).is_zero() for _ in range(30)):
                continue  # not provably a non-member; draw again
            outcome = decide(other)
            rejected += 1
            res.instances += 1
            if outcome:
                res.fail(f"{kind}: non-member accepted: {other}")
                continue
            pt, value = outcome.point, outcome.value
            res.expect(pt is not None and value is not None and not value.is_zero()
                       and evaluate(other, pt) == value,
                       f"{kind}: missing or wrong witness for {other}")
    return res


def check_affine_rejection(rng: random.Random) -> CheckResult:
    res = CheckResult(6, "degree-1 polynomials never vanish on sphere products")
    for _ in range(100):
        n = rng.randint(1, 3)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exp = tuple(rng.randint(0, 1) for _ in range(n))
            terms[exp] = rand_quat(rng)
        p = SlicePoly(n, terms)
        if p.is_zero():
            p = SlicePoly.constant(1, n)
        reps = [on_slice(rng, rand_direction(rng)) for _ in range(n)]
        res.expect(not vanishes_on_sphere_product(p, reps), f"accepted {p}")
        res.instances += 1
    return res


def check_q_ell(rng: random.Random) -> CheckResult:
    res = CheckResult(7, "Q_l vanishes at arranged pairs (both orientations)")
    cases = {1: 0, -1: 0}
    pythagorean = [(1, 2, 2), (2, 3, 6), (0, 3, 4), (1, 4, 8), (2, 6, 9), (0, 0, 1)]
    for i in range(200):
        v = list(rng.choice(pythagorean))
        rng.shuffle(v)
        v = [c * rng.choice((1, -1)) for c in v]
        u = Quaternion(0, *v)
        sign = 1 if i % 2 == 0 else -1
        s1 = rand_nonzero_rat(rng)
        s2 = abs(rand_nonzero_rat(rng)) * sign * (1 if s1 > 0 else -1)
        a = Quaternion(rand_rat(rng)) + u * s1
        b = Quaternion(rand_rat(rng)) + u * s2
        n = rng.randint(2, 3)
        ell = rng.randint(1, n - 1)
        q = q_ell_poly(a, b, ell, n)
        pt = [rand_quat(rng) for _ in range(n)]
        pt[ell - 1], pt[ell] = a, b
        res.expect(evaluate(q, pt).is_zero(), f"Q nonzero at ({a}, {b})")
        res.expect(q == q_ell_oracle(a, b, ell, n), f"Q differs from norm formula for ({a}, {b})")
        res.expect(q.is_real(), f"Q not real for ({a}, {b})")
        g = rand_rotor(rng)
        pt[ell - 1], pt[ell] = conjugate_by(a, g), conjugate_by(b, g)
        res.expect(evaluate(q, pt).is_zero(), f"Q nonzero on the orbit of ({a}, {b})")
        cases[1 if a.dot(b) > 0 else -1] += 1
        res.instances += 1
    res.expect(cases[1] > 0 and cases[-1] > 0, f"sign cases not both covered: {cases}")
    return res


def _slice_point(rng, K, n, upper=False):
    pts = []
    for _ in range(n):
        y = rand_rat(rng)
        pts.append(Quaternion(rand_rat(rng)) + K * (abs(y) if upper else y))
    return tuple(pts)


def check_representation(rng: random.Random) -> CheckResult:
    res = CheckResult(8, "representation formula and splitting")
    for _ in range(100):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, max_deg=3, max_terms=4)
        Jv, Kv = rand_unit(rng), rand_unit(rng)
        z = _slice_point(rng, Kv, n, upper=True)
        w = tuple(Quaternion(c.re) + Jv * c.dot(Kv) for c in z)
        res.expect(represent(p, Jv, Kv, z) == evaluate(p, w), f"representation: {p} J={Jv} K={Kv} z={z}")
        res.instances += 1
    for _ in range(100):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, max_deg=3, max_terms=4)
        g = rand_rotor(rng)
        frame = SliceFrame(conjugate_by(I, g), conjugate_by(J, g))
        f, gpart = split(p, frame)
        res.expect(all(slice_coords(c, frame.K) is not None
                       for poly in (f, gpart) for _, c in poly.items()),
                   f"split coefficients leave C_K for {p}")
        res.expect(f + gpart * frame.L == p, f"F + G L != P for {p}")
        z = _slice_point(rng, frame.K, n)
        res.expect(evaluate(p, z) == evaluate(f, z) + evaluate(gpart, z) * frame.L,
                   f"split value mismatch for {p} at {z}")
        res.instances += 1
    return res


def _vanish_at_two(rng, p0: SlicePoly, b, c) -> SlicePoly:
    """Adjust p0 by ``q1*beta + gamma`` so that it vanishes at b and c (b1 != c1)."""
    n = p0.nvars
    beta = (b[0] - c[0]).inverse() * (evaluate(p0, c) - evaluate(p0, b))
    gamma = -evaluate(p0, b) - b[0] * beta
    return p0 + SlicePoly.var(1, n) * beta + gamma


def check_two_points(rng: random.Random) -> CheckResult:
    res = CheckResult(9, "two zeros on an arranged sphere force all of it")
    for _ in range(100):
        n = rng.randint(1, 3)
        u = rand_direction(rng)
        base = tuple(on_slice(rng, u) for _ in range(n))
        while True:
            g1, g2 = rand_rotor(rng), rand_rotor(rng)
            b = tuple(conjugate_by(a, g1) for a in base)
            c = tuple(conjugate_by(a, g2) for a in base)
            if b[0] != c[0]:
                break
        p = _vanish_at_two(rng, random_poly(rng, n, max_deg=2, max_terms=3), b, c)
        res.expect(evaluate(p, b).is_zero() and evaluate(p, c).is_zero(), "construction")
        res.expect(bool(vanishes_on_arranged_sphere(p, base)), f"rejected {p} on {base}")
        for _ in range(10):
            g = rand_rotor(rng)
            pt = tuple(conjugate_by(a, g) for a in base)
            res.expect(evaluate(p, pt).is_zero(), f"{p} nonzero at orbit point {pt}")
        res.instances += 1
    for _ in range(20):
        p = _vanish_at_two(rng, random_poly(rng, 1, max_deg=3, max_terms=3), (I,), (J,))
        cert = vanishes_on_arranged_sphere(p, (I,))
        res.expect(bool(cert), f"one variable: {p} vanishes at i, j but rejected on S")
        for _ in range(5):
            res.expect(evaluate(p, (rand_unit(rng),)).is_zero(), f"{p} nonzero on S")
        res.instances += 1
    return res


_PYTHAGOREAN = [(1, 2, 2), (2, 3, 6), (0, 3, 4), (1, 4, 8), (2, 6, 9), (4, 4, 7), (0, 0, 1)]


def _rational_norm_direction(rng) -> Quaternion:
    v = list(rng.choice(_PYTHAGOREAN))
    rng.shuffle(v)
    return Quaternion(0, *(c * rng.choice((1, -1)) for c in v))


def _junction_point(rng, blocks: int):
    """Head of ``blocks`` same-slice runs (consecutive runs noncommuting) plus a tail."""
    dirs = [_rational_norm_direction(rng)]
    while len(dirs) < blocks + 1:
        d = _rational_norm_direction(rng)
        if not commutes(d, dirs[-1]):
            dirs.append(d)
    head = []
    for d in dirs[:-1]:
        head += [on_slice(rng, d) for _ in range(rng.randint(1, 2))]
    tail = (on_slice(rng, dirs[-1]),)
    return tuple(head), tail


def check_enlargement(rng: random.Random) -> CheckResult:
    res = CheckResult(10, "enlargement recovers balloons; 2^(p-1) junction candidates")
    for _ in range(50):
        b = rand_balloon(rng, rng.randint(2, 3))
        gens = []
        from .vanishing import balloon_divisors
        for d in balloon_divisors(b):
            gens.append(d.poly * rand_poly(rng, b.nvars, max_deg=1, max_terms=2))
        ideal = RightIdeal(tuple(g for g in gens if not g.is_zero()) or (SlicePoly.zero(b.nvars),))
        report = enlarge_zero(ideal, b.base)
        found = any(c.tail == b.tail and same_orbit(c.head, b.head) for c in report.balloons)
        res.expect(found, f"generating balloon {b.to_json()} not recovered")
        res.instances += 1
    for p in (2, 3):
        for _ in range(5):
            head, tail = _junction_point(rng, p)
            n = len(head) + len(tail)
            gens = [sphere_oracle(a, l + 1, n) for l, a in enumerate(head)]
            gens += [SlicePoly.var(len(head) + 1, n) - tail[0]]
            report = enlarge_zero(RightIdeal(tuple(gens)), head + tail)
            res.expect(report.t == len(head), f"t = {report.t}, expected {len(head)}")
            res.expect(len(report.blocks) == p, f"{len(report.blocks)} blocks, expected {p}")
            res.expect(len(report.candidates) == 2 ** (p - 1),
                       f"{len(report.candidates)} candidates for p = {p}")
            heads = [c.balloon.head for c in report.candidates if c.balloon]
            distinct = all(not same_orbit(x, y) for i, x in enumerate(heads) for y in heads[i + 1:])
            res.expect(distinct, "candidate arranged spheres coincide")
            res.expect(len(report.balloons) >= 1, f"no candidate verified for p = {p}")
            res.instances += 1
    return res


def _random_tree(rng, n, pool, depth=2):
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.08:
            return empty_set(n)
        if roll < 0.16:
            return full_set(n)
        gens = []
        for _ in range(rng.randint(1, 2)):
            m = rng.randint(1, n)
            c = rng.choice(pool)
            gens.append((SlicePoly.var(m, n) - c) * rand_poly(rng, n, max_deg=1, max_terms=2))
        gens = [g for g in gens if not g.is_zero()] or [SlicePoly.var(1, n) - pool[0]]
        return leaf(*gens)
    left = _random_tree(rng, n, pool, depth - 1)
    right = _random_tree(rng, n, pool, depth - 1)
    return union(left, right) if rng.random() < 0.5 else intersect([left, right])


def check_slice_topology(rng: random.Random) -> CheckResult:
    res = CheckResult(11, "sliced set semantics match descriptor semantics")
    seen = {True: 0, False: 0}
    for _ in range(50):
        n = rng.randint(1, 3)
        g = rand_rotor(rng)
        frame = SliceFrame(conjugate_by(I, g), conjugate_by(J, g))
        pool = [Quaternion(rand_rat(rng)) + frame.K * rand_rat(rng) for _ in range(3)]
        tree = _random_tree(rng, n, pool)
        sliced = slice_set(tree, frame)
        for _ in range(30):
            z = tuple(rng.choice(pool) if rng.random() < 0.7 else
                      Quaternion(rand_rat(rng)) + frame.K * rand_rat(rng) for _ in range(n))
            expected = tree.contains(z)
            seen[expected] += 1
            res.expect(sliced.contains(z) == expected, f"mismatch at {z} for {tree.to_json()}")
        res.instances += 1
    res.expect(seen[True] > 0 and seen[False] > 0, f"degenerate sampling {seen}")
    return res


CHECKS: list[Callable[[random.Random], CheckResult]] = [
    check_ring_axioms,
    check_product_identity,
    check_star_evaluation,
    check_division,
    check_vanishing,
    check_affine_rejection,
    check_q_ell,
    check_representation,
    check_two_points,
    check_enlargement,
    check_slice_topology,
]


def run_check(number: int, seed: int) -> CheckResult:
    fn = CHECKS[number - 1]
    start = time.perf_counter()
    result = fn(random.Random(f"{seed}:{number}"))
    result.seconds = time.perf_counter() - start
    return result


def run_all(seed: int = 0) -> list[CheckResult]:
    return [run_check(i, seed) for i in range(1, len(CHECKS) + 1)]
