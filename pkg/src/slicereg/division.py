"""Euclidean division by polynomials monic in one variable.

Writing ``M = sum_k q_m^k * A_k`` with ``A_k`` free of ``q_m``, M is monic in
``q_m`` when the top ``A_d`` is the constant 1.  Since 1 is central, long
division from the top ``q_m``-degree down works verbatim in the
noncommutative ring and yields the unique ``P = M*Q + R`` with
``deg_{q_m} R < d``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadIndex, ChainOrderViolation, IndexClash, NotMonic
from .polyring import SlicePoly, star_mul
from .quatcore import ONE


def leading_part(p: SlicePoly, m: int) -> tuple[int, SlicePoly]:
    """``(d, A_d)`` where ``p = q_m^d * A_d + lower`` and ``A_d`` is free of ``q_m``."""
    d = p.deg_in(m)
    terms = {}
    for exp, c in p.items():
        if exp[m - 1] == d:
            e = list(exp)
            e[m - 1] = 0
            terms[tuple(e)] = c
    return d, SlicePoly(p.nvars, terms)


def monic_degree(divisor: SlicePoly, m: int) -> int:
    """Degree of ``divisor`` in ``q_m``, after checking it is monic there."""
    if not 1 <= m <= divisor.nvars:
        raise BadIndex(f"variable index {m} outside 1..{divisor.nvars}")
    if divisor.is_zero():
        raise NotMonic("zero polynomial is not monic")
    d, lead = leading_part(divisor, m)
    if d < 1:
        raise NotMonic(f"divisor has degree {d} in q{m}")
    if lead != SlicePoly.constant(ONE, divisor.nvars):
        raise NotMonic(f"leading q{m}-coefficient is {lead}, not 1")
    return d


def div_monic(p: SlicePoly, divisor: SlicePoly, m: int) -> tuple[SlicePoly, SlicePoly]:
    """Return ``(Q, R)`` with ``p = divisor * Q + R`` and ``deg_{q_m} R < deg_{q_m} divisor``."""
    if p.nvars != divisor.nvars:
        from .errors import ArityMismatch
        raise ArityMismatch(f"{p.nvars} vs {divisor.nvars} variables")
    d = monic_degree(divisor, m)
    quotient: dict = {}
    rem = p
    while not rem.is_zero() and rem.deg_in(m) >= d:
        e, top = leading_part(rem, m)
        shift = [0] * p.nvars
        shift[m - 1] = e - d
        shift = tuple(shift)
        step = {tuple(a + b for a, b in zip(exp, shift)): c for exp, c in top.items()}
        step_poly = SlicePoly(p.nvars, step)
        for exp, c in step.items():
            quotient[exp] = quotient[exp] + c if exp in quotient else c
        rem = rem - star_mul(divisor, step_poly)
    return SlicePoly(p.nvars, quotient), rem


def double_remainder(p: SlicePoly, first: SlicePoly, second: SlicePoly,
                     m: int, ell: int) -> SlicePoly:
    """Remainder of (remainder of p by ``first`` in q_m) by ``second`` in q_ell.

    ``second`` must not involve ``q_m``; then the result has degree below
    both divisor degrees in their respective variables.
    """
    if m == ell:
        raise IndexClash("the two division variables must differ")
    monic_degree(first, m)
    monic_degree(second, ell)
    if not second.free_of(m):
        raise ChainOrderViolation(f"second divisor involves q{m}")
    _, r = div_monic(p, first, m)
    _, t = div_monic(r, second, ell)
    return t


def reduce_chain(p: SlicePoly, divisors: Sequence[tuple[SlicePoly, int]]
                 ) -> tuple[list[SlicePoly], SlicePoly]:
    """Divide successively; return cofactors ``C_i`` and final remainder R.

    ``p = sum_i divisor_i * C_i + R`` with ``deg_{q_{m_i}} R < d_i`` for all i.
    Each divisor must be free of every variable divided out before it; the
    order is never changed silently since it determines the certificate.
    """
    seen: list[int] = []
    for i, (dv, m) in enumerate(divisors):
        monic_degree(dv, m)
        for prev in seen:
            if not dv.free_of(prev):
                raise ChainOrderViolation(
                    f"divisor #{i} involves q{prev}, which an earlier divisor reduced")
        seen.append(m)
    cofactors = []
    rem = p
    for dv, m in divisors:
        c, rem = div_monic(rem, dv, m)
        cofactors.append(c)
    return cofactors, rem
