"""The ring H[q1, ..., qn] of slice regular polynomials under the star product.

A :class:`SlicePoly` is a sparse map from exponent tuples to quaternion
coefficients, written with the coefficient on the right::

    q1^l1 * ... * qn^ln * a

Variable indices in the public API are 1-based (``m = 1`` is ``q1``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import ArityMismatch, BadIndex, NonCommutingPoint
from .quatcore import ONE, ZERO, Quaternion, SphereDescriptor, pairwise_commuting

MINUS_INFINITY = -math.inf

Exponent = tuple[int, ...]
Point = tuple[Quaternion, ...]


class SlicePoly:
    """Immutable sparse polynomial in ``nvars`` quaternionic variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: dict[Exponent, Quaternion] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ArityMismatch(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            q = Quaternion.coerce(coeff)
            if exp in clean:
                q = clean[exp] + q
            if q.is_zero():
                clean.pop(exp, None)
            else:
                clean[exp] = q
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict[Exponent, Quaternion]) -> SlicePoly:
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("SlicePoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> SlicePoly:
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> SlicePoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, m: int, nvars: int) -> SlicePoly:
        _check_index(m, nvars)
        exp = [0] * nvars
        exp[m - 1] = 1
        return cls(nvars, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=ONE) -> SlicePoly:
        return cls(len(exp), {tuple(exp): coeff})

    # -- inspection ------------------------------------------------------

    def items(self) -> Iterator[tuple[Exponent, Quaternion]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Exponent, Quaternion]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def coeff(self, exp: Sequence[int]) -> Quaternion:
        return self._terms.get(tuple(exp), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self._terms)

    def constant_term(self) -> Quaternion:
        return self._terms.get((0,) * self.nvars, ZERO)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def deg_in(self, m: int):
        """Degree in ``q_m``; ``MINUS_INFINITY`` for the zero polynomial."""
        _check_index(m, self.nvars)
        if not self._terms:
            return MINUS_INFINITY
        return max(exp[m - 1] for exp in self._terms)

    def total_degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(exp) for exp in self._terms)

    def free_of(self, m: int) -> bool:
        _check_index(m, self.nvars)
        return all(exp[m - 1] == 0 for exp in self._terms)

    def variables(self) -> set[int]:
        return {m + 1 for exp in self._terms for m, e in enumerate(exp) if e}

    # -- ring operations -------------------------------------------------

    def _check(self, other: SlicePoly) -> None:
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms[exp] + c if exp in terms else c
            if s.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = s
        return SlicePoly._from_clean(self.nvars, terms)

    def __radd__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + self

    def __neg__(self):
        return SlicePoly._from_clean(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Star product; a bare scalar multiplies coefficients on the right."""
        if isinstance(other, SlicePoly):
            return star_mul(self, other)
        if isinstance(other, (Quaternion, int, Fraction)):
            c = Quaternion.coerce(other)
            return SlicePoly._from_clean(self.nvars, _prune(
                {e: a * c for e, a in self._terms.items()}))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Quaternion, int, Fraction)):
            c = Quaternion.coerce(other)
            return SlicePoly._from_clean(self.nvars, _prune(
                {e: c * a for e, a in self._terms.items()}))
        return NotImplemented

    def __pow__(self, exponent: int) -> SlicePoly:
        if exponent < 0:
            raise ValueError("negative star powers are undefined")
        result = SlicePoly.constant(ONE, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = star_mul(result, base)
            base = star_mul(base, base)
            exponent >>= 1
        return result

    def _lift(self, other):
        if isinstance(other, SlicePoly):
            return other
        if isinstance(other, (Quaternion, int, Fraction)):
            return SlicePoly.constant(other, self.nvars)
        return None

    def __eq__(self, other):
        if isinstance(other, SlicePoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (Quaternion, int, Fraction)):
            return self == SlicePoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self._terms.items()))))
        return self._hash

    # -- evaluation and reshaping ------------------------------------------

    def eval(self, point: Sequence[Quaternion]) -> Quaternion:
        return evaluate(self, point)

    def __call__(self, *point) -> Quaternion:
        return evaluate(self, point)

    def extend(self, nvars: int) -> SlicePoly:
        """The same polynomial viewed in more variables (appended on the right)."""
        if nvars < self.nvars:
            raise ArityMismatch("extend cannot drop variables")
        pad = (0,) * (nvars - self.nvars)
        return SlicePoly._from_clean(nvars, {e + pad: c for e, c in self._terms.items()})

    def truncate(self, nvars: int) -> SlicePoly:
        """Drop trailing variables the polynomial does not involve."""
        if any(any(e[nvars:]) for e in self._terms):
            raise ArityMismatch("polynomial involves the dropped variables")
        return SlicePoly._from_clean(nvars, {e[:nvars]: c for e, c in self._terms.items()})

    # -- text / json -------------------------------------------------------

    def __repr__(self):
        return f"SlicePoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(exp), "coeff": c.to_json()} for exp, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SlicePoly:
        nvars = int(data["nvars"])
        terms: dict = {}
        for term in data["terms"]:
            exp = tuple(int(e) for e in term["exp"])
            c = Quaternion.from_json(term["coeff"])
            terms[exp] = terms.get(exp, ZERO) + c
        return cls(nvars, terms)


def _prune(terms: dict[Exponent, Quaternion]) -> dict[Exponent, Quaternion]:
    return {e: c for e, c in terms.items() if not c.is_zero()}


def _check_index(m: int, nvars: int) -> None:
    if not isinstance(m, int) or not 1 <= m <= nvars:
        raise BadIndex(f"variable index {m} outside 1..{nvars}")


def star_mul(p: SlicePoly, q: SlicePoly) -> SlicePoly:
    """Star product: exponents add, coefficients multiply in order (p's first)."""
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    out: dict[Exponent, Quaternion] = {}
    for e1, a in p._terms.items():
        for e2, b in q._terms.items():
            exp = tuple(x + y for x, y in zip(e1, e2))
            prod = a * b
            if exp in out:
                out[exp] = out[exp] + prod
            else:
                out[exp] = prod
    return SlicePoly._from_clean(p.nvars, _prune(out))


def _as_point(point: Sequence, nvars: int) -> Point:
    pt = tuple(Quaternion.coerce(c) for c in point)
    if len(pt) != nvars:
        raise ArityMismatch(f"point has {len(pt)} coordinates, expected {nvars}")
    return pt


def evaluate(p: SlicePoly, point: Sequence) -> Quaternion:
    """Sum over terms of ``a1^l1 * ... * an^ln * coeff`` (ordered product)."""
    pt = _as_point(point, p.nvars)
    cache: dict[tuple[int, int], Quaternion] = {}

    def power(m: int, e: int) -> Quaternion:
        key = (m, e)
        if key not in cache:
            cache[key] = pt[m] ** e
        return cache[key]

    total = ZERO
    for exp, c in p._terms.items():
        value = None
        for m, e in enumerate(exp):
            if e:
                f = power(m, e)
                value = f if value is None else value * f
        total = total + (c if value is None else value * c)
    return total


def has_commuting_components(point: Sequence[Quaternion]) -> bool:
    return pairwise_commuting(point)


def eval_star_product(p: SlicePoly, q: SlicePoly, point: Sequence) -> Quaternion:
    """Value of ``p*q`` at a point with commuting components, via values of p and q.

    Returns 0 if ``p(a) = 0``, else ``p(a) * q(p(a)^-1 a1 p(a), ..., p(a)^-1 an p(a))``.
    """
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    pt = _as_point(point, p.nvars)
    if not has_commuting_components(pt):
        raise NonCommutingPoint("point components must pairwise commute")
    v = evaluate(p, pt)
    if v.is_zero():
        return ZERO
    vinv = v.inverse()
    moved = tuple(vinv * a * v for a in pt)
    return v * evaluate(q, moved)


def substitute_tail(p: SlicePoly, k: int, tail: Sequence) -> SlicePoly:
    """Freeze the last ``nvars - k`` variables at ``tail``; result has k variables.

    Exact because the frozen variables sit rightmost in every ordered monomial,
    so ``eval(result, head) == eval(p, head + tail)`` for every head.
    """
    tail = tuple(Quaternion.coerce(c) for c in tail)
    if k < 1 or k > p.nvars or len(tail) != p.nvars - k:
        raise ArityMismatch(f"tail of length {len(tail)} does not fit k={k}, n={p.nvars}")
    if k == p.nvars:
        return p
    out: dict[Exponent, Quaternion] = {}
    for exp, c in p._terms.items():
        factor = ONE
        for a, e in zip(tail, exp[k:]):
            if e:
                factor = factor * a ** e
        head = exp[:k]
        value = factor * c
        out[head] = out[head] + value if head in out else value
    return SlicePoly._from_clean(k, _prune(out))


def is_real(p: SlicePoly) -> bool:
    return p.is_real()


def deg_in(p: SlicePoly, m: int):
    return p.deg_in(m)


def sphere_poly(s: SphereDescriptor, m: int, nvars: int) -> SlicePoly:
    """``q_m^2 - 2 Re(a) q_m + |a|^2`` embedded in ``nvars`` variables."""
    _check_index(m, nvars)

    def e(power: int) -> Exponent:
        exp = [0] * nvars
        exp[m - 1] = power
        return tuple(exp)

    return SlicePoly(nvars, {e(2): ONE, e(1): Quaternion(-2 * s.re), e(0): Quaternion(s.norm_sq)})


def linear_poly(a, m: int, nvars: int) -> SlicePoly:
    """``q_m - a``."""
    return SlicePoly.var(m, nvars) - Quaternion.coerce(a)


def var_name(m: int, nvars: int) -> str:
    return "q" if nvars == 1 else f"q{m}"


def _format_coeff(c: Quaternion) -> tuple[str, str, bool]:
    """(sign, body, is_unit_one) for a coefficient placed after a monomial."""
    nonzero = [(v, u) for v, u in zip(c.components, ("", "i", "j", "k")) if v]
    if len(nonzero) == 1:
        value, unit = nonzero[0]
        sign = "-" if value < 0 else "+"
        mag = str(abs(value))
        if unit and mag == "1":
            mag = ""
        body = mag + unit
        return sign, body, body == "1"
    return "+", "(" + c.short() + ")", False


def format_poly(p: SlicePoly) -> str:
    """Canonical text: graded-lex order, coefficients written rightmost."""
    if p.is_zero():
        return "0"
    pieces: list[tuple[str, str]] = []
    for exp, c in p.sorted_items():
        mono = "*".join(
            var_name(m + 1, p.nvars) + (f"^{e}" if e > 1 else "")
            for m, e in enumerate(exp) if e
        )
        sign, body, is_one = _format_coeff(c)
        if not mono:
            if len(p) == 1 and body.startswith("("):
                body = body[1:-1]
            pieces.append((sign, body))
        elif is_one:
            pieces.append((sign, mono))
        else:
            pieces.append((sign, f"{mono}*{body}"))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def random_poly(rng, nvars: int, max_deg: int = 3, max_terms: int = 4,
                coeff_range: int = 3, real: bool = False) -> SlicePoly:
    """A random sparse polynomial with small integer quaternion coefficients."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        if real:
            c = Quaternion(rng.randint(-coeff_range, coeff_range))
        else:
            c = Quaternion(*(rng.randint(-coeff_range, coeff_range) for _ in range(4)))
        terms[exp] = terms.get(exp, ZERO) + c
    return SlicePoly(nvars, terms)
