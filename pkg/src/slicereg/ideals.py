"""Right ideals, zero-set enlargement and slice algebraic sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

from .errors import (AntipodalDirections, ArityMismatch, IrrationalNorm,
                     NotACommonZero)
from .polyring import SlicePoly, evaluate
from .quatcore import Quaternion, aligner, commutes, conjugate_by, rotor_between, im_ratio
from .slicegeom import Balloon, SliceFrame, split
from .vanishing import balloon_divisors, vanishes_on_balloon


def _point(p: Sequence) -> tuple[Quaternion, ...]:
    return tuple(Quaternion.coerce(c) for c in p)


@dataclass(frozen=True)
class RightIdeal:
    """The right ideal ``{sum_i G_i * X_i}`` spanned by finitely many generators."""

    generators: tuple[SlicePoly, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a right ideal needs at least one generator")
        if len({g.nvars for g in gens}) != 1:
            raise ArityMismatch("generators have different arities")
        object.__setattr__(self, "generators", gens)

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars

    def element(self, cofactors: Sequence[SlicePoly]) -> SlicePoly:
        """``sum_i G_i * cofactor_i``."""
        if len(cofactors) != len(self.generators):
            raise ValueError("one cofactor per generator")
        total = SlicePoly.zero(self.nvars)
        for g, c in zip(self.generators, cofactors):
            total = total + g * c
        return total

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data) -> RightIdeal:
        if isinstance(data, list):
            return cls(tuple(SlicePoly.from_json(g) for g in data))
        return cls(tuple(SlicePoly.from_json(g) for g in data["generators"]))


def v_contains(ideal: RightIdeal, p: Sequence) -> bool:
    """True iff every generator vanishes at p."""
    p = _point(p)
    if len(p) != ideal.nvars:
        raise ArityMismatch(f"point has {len(p)} coordinates, expected {ideal.nvars}")
    return all(evaluate(g, p).is_zero() for g in ideal.generators)


def commuting_tail_index(p: Sequence) -> int:
    """Smallest t such that components t+1..n pairwise commute (0 if all do)."""
    p = _point(p)
    n = len(p)
    t = n - 1 if n else 0
    # extend the commuting tail leftwards while it stays pairwise commuting
    while t > 0 and all(commutes(p[t - 1], p[s]) for s in range(t, n)):
        t -= 1
    return t


def head_blocks(head: Sequence[Quaternion]) -> list[tuple[int, int]]:
    """Maximal runs ``[start, end)`` of consecutive components sharing a slice."""
    blocks: list[tuple[int, int]] = []
    start, direction = 0, None
    for i, a in enumerate(head):
        if a.is_real():
            continue
        if direction is None:
            direction = a
        elif not commutes(a, direction):
            blocks.append((start, i))
            start, direction = i, a
    if head:
        blocks.append((start, len(head)))
    return blocks


def _direction(comps: Sequence[Quaternion]) -> Quaternion:
    for a in comps:
        if not a.is_real():
            return a.im
    raise ValueError("block has no non-real component")


@dataclass(frozen=True)
class Candidate:
    signs: tuple[int, ...]
    balloon: Balloon | None
    rotors: tuple[Quaternion, ...]
    verified: bool
    error: str | None = None

    def to_json(self) -> dict:
        return {"signs": list(self.signs),
                "balloon": self.balloon.to_json() if self.balloon else None,
                "rotors": [g.to_json() for g in self.rotors],
                "verified": self.verified,
                "error": self.error}


@dataclass(frozen=True)
class EnlargementReport:
    point: tuple[Quaternion, ...]
    t: int
    blocks: tuple[tuple[int, int], ...]
    candidates: tuple[Candidate, ...]

    @property
    def balloons(self) -> list[Balloon]:
        return [c.balloon for c in self.candidates if c.verified]

    @property
    def junctions(self) -> int:
        return max(len(self.blocks) - 1, 0)

    def to_json(self) -> dict:
        return {"point": [a.to_json() for a in self.point],
                "t": self.t,
                "blocks": [list(b) for b in self.blocks],
                "candidates": [c.to_json() for c in self.candidates],
                "balloons": [b.to_json() for b in self.balloons]}


def _verify(ideal: RightIdeal, b: Balloon) -> bool:
    return all(vanishes_on_balloon(g, b) for g in ideal.generators)


def enlarge_zero(ideal: RightIdeal, p: Sequence) -> EnlargementReport:
    """Balloons through (rotations of) a common zero, each verified exactly.

    With t the commuting-tail index, the head ``p[:t]`` splits into p blocks
    lying in successive slices.  At each of the p-1 junctions the combined
    block so far is rotated into the next block's slice in one of two ways,
    giving 2^(p-1) candidate arranged heads; each candidate balloon
    ``head x {p[t:]}`` is kept only if every generator vanishes on it.
    """
    pt = _point(p)
    if not v_contains(ideal, pt):
        raise NotACommonZero("some generator does not vanish at the point")
    t = commuting_tail_index(pt)
    candidates: list[Candidate] = []
    if t == 0:
        options = []
        if any(not a.is_real() for a in pt):
            options.append(Balloon(pt, ()))
        options.append(Balloon((), pt))
        for b in options:
            candidates.append(Candidate((), b, (), _verify(ideal, b)))
        return EnlargementReport(pt, 0, (), tuple(candidates))

    head, tail = pt[:t], pt[t:]
    blocks = head_blocks(head)
    for signs in product((1, -1), repeat=len(blocks) - 1):
        comps = list(head)
        rotors: list[Quaternion] = []
        try:
            for j, sign in enumerate(signs):
                end = blocks[j][1]
                nxt = blocks[j + 1]
                u = _direction(comps[:end])
                w = _direction(head[nxt[0]:nxt[1]]) * sign
                try:
                    g = aligner(u, w)
                except AntipodalDirections:
                    g = rotor_between(u, w * im_ratio(u, w))
                comps[:end] = [conjugate_by(c, g) for c in comps[:end]]
                rotors.append(g)
        except IrrationalNorm as exc:
            candidates.append(Candidate(signs, None, tuple(rotors), False, str(exc)))
            continue
        b = Balloon(tuple(comps), tail)
        candidates.append(Candidate(signs, b, tuple(rotors), _verify(ideal, b)))
    return EnlargementReport(pt, t, tuple(blocks), tuple(candidates))


def balloon_ideal(b: Balloon) -> RightIdeal:
    """Generators of the right ideal of polynomials vanishing on a balloon."""
    return RightIdeal(tuple(d.poly for d in balloon_divisors(b)))


# -- slice algebraic sets ----------------------------------------------------

@dataclass(frozen=True)
class VLeaf:
    """Common zero set of finitely many polynomials."""

    generators: tuple[SlicePoly, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("leaf needs at least one polynomial")
        if len({g.nvars for g in gens}) != 1:
            raise ArityMismatch("generators have different arities")
        object.__setattr__(self, "generators", gens)

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars

    def contains(self, p: Sequence) -> bool:
        p = _point(p)
        return all(evaluate(g, p).is_zero() for g in self.generators)

    def to_json(self) -> dict:
        return {"op": "V", "generators": [g.to_json() for g in self.generators]}


@dataclass(frozen=True)
class SetUnion:
    children: tuple

    @property
    def nvars(self) -> int:
        return self.children[0].nvars

    def contains(self, p) -> bool:
        return any(c.contains(p) for c in self.children)

    def to_json(self) -> dict:
        return {"op": "union", "children": [c.to_json() for c in self.children]}


@dataclass(frozen=True)
class SetIntersection:
    children: tuple

    @property
    def nvars(self) -> int:
        return self.children[0].nvars

    def contains(self, p) -> bool:
        return all(c.contains(p) for c in self.children)

    def to_json(self) -> dict:
        return {"op": "intersection", "children": [c.to_json() for c in self.children]}


SliceAlgebraicSet = Union[VLeaf, SetUnion, SetIntersection]


def leaf(*generators: SlicePoly) -> VLeaf:
    return VLeaf(tuple(generators))


def empty_set(nvars: int) -> VLeaf:
    return VLeaf((SlicePoly.constant(1, nvars),))


def full_set(nvars: int) -> VLeaf:
    return VLeaf((SlicePoly.zero(nvars),))


def union(s1: SliceAlgebraicSet, s2: SliceAlgebraicSet) -> SetUnion:
    if s1.nvars != s2.nvars:
        raise ArityMismatch(f"{s1.nvars} vs {s2.nvars} variables")
    return SetUnion((s1, s2))


def intersect(sets: Sequence[SliceAlgebraicSet]) -> SliceAlgebraicSet:
    sets = tuple(sets)
    if not sets:
        raise ValueError("intersect needs at least one set")
    if len({s.nvars for s in sets}) != 1:
        raise ArityMismatch("sets have different arities")
    if len(sets) == 1:
        return sets[0]
    return SetIntersection(sets)


def set_from_json(data) -> SliceAlgebraicSet:
    op = data.get("op", "V")
    if op == "V":
        return VLeaf(tuple(SlicePoly.from_json(g) for g in data["generators"]))
    children = tuple(set_from_json(c) for c in data["children"])
    if op == "union":
        return SetUnion(children)
    if op == "intersection":
        return SetIntersection(children)
    raise ValueError(f"unknown set operation {op!r}")


# sliced counterparts: complex systems on C_K^n

@dataclass(frozen=True)
class ComplexSystem:
    """``{F_l = 0, G_l = 0}`` for each generator ``P_l = F_l + G_l L``."""

    frame: SliceFrame
    equations: tuple[tuple[SlicePoly, SlicePoly], ...]

    @property
    def nvars(self) -> int:
        return self.equations[0][0].nvars

    def contains(self, z: Sequence) -> bool:
        z = _point(z)
        return all(evaluate(f, z).is_zero() and evaluate(g, z).is_zero()
                   for f, g in self.equations)

    def to_json(self) -> dict:
        return {"op": "system",
                "equations": [{"F": complex_json(f, self.frame.K),
                               "G": complex_json(g, self.frame.K)}
                              for f, g in self.equations]}


@dataclass(frozen=True)
class SlicedUnion:
    children: tuple

    def contains(self, z) -> bool:
        return any(c.contains(z) for c in self.children)

    def to_json(self) -> dict:
        return {"op": "union", "children": [c.to_json() for c in self.children]}


@dataclass(frozen=True)
class SlicedIntersection:
    children: tuple

    def contains(self, z) -> bool:
        return all(c.contains(z) for c in self.children)

    def to_json(self) -> dict:
        return {"op": "intersection", "children": [c.to_json() for c in self.children]}


def complex_json(f: SlicePoly, K: Quaternion) -> dict:
    """Coefficients ``x + yK`` of a C_K polynomial written as ``[x, y]``."""
    return {"nvars": f.nvars,
            "terms": [{"exp": list(exp), "coeff": [str(c.re), str(c.dot(K))]}
                      for exp, c in f.sorted_items()]}


def slice_set(s: SliceAlgebraicSet, frame: SliceFrame):
    """Restrict to C_K^n: each leaf becomes the complex system of its splittings."""
    if isinstance(s, VLeaf):
        return ComplexSystem(frame, tuple(split(g, frame) for g in s.generators))
    if isinstance(s, SetUnion):
        return SlicedUnion(tuple(slice_set(c, frame) for c in s.children))
    if isinstance(s, SetIntersection):
        return SlicedIntersection(tuple(slice_set(c, frame) for c in s.children))
    raise TypeError(f"not a slice algebraic set: {s!r}")
