"""Theta functions f(a, b), phi(q), psi(q) and infinite q-products.

Series are truncated by explicit plans: the index is chosen so that the
neglected tail is below ``2**-(working_bits + 4)``, and the plan object
carries the resulting bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .numerics import ArbReal, Precision

_EXTRA_TAIL_BITS = 4


@dataclass(frozen=True)
class TruncationPlan:
    n_max: int
    tail_bound: ArbReal


def _eps(prec: Precision) -> ArbReal:
    return ArbReal.from_int(2, prec) ** -(prec.working_bits + _EXTRA_TAIL_BITS)


def _check_q(q: ArbReal) -> None:
    if abs(q) >= 1:
        raise DomainError(f"|q| must be < 1, got {q!r}")


def _neg_log(x: ArbReal) -> float:
    """-ln|x| as a float, safe for |x| far below the float range."""
    return -float(abs(x).log())


# -- truncation plans --------------------------------------------------

def phi_plan(q: ArbReal) -> TruncationPlan:
    """Smallest N with 2|q|^((N+1)^2)/(1-|q|) below the working epsilon."""
    _check_q(q)
    eps = _eps(q.prec)
    aq = abs(q)
    if aq.is_zero():
        return TruncationPlan(0, aq)
    target = _neg_log(eps)
    n = max(1, math.isqrt(int(target / _neg_log(aq))) - 1)
    while True:
        tail = 2 * aq ** ((n + 1) ** 2) / (1 - aq)
        if tail < eps:
            return TruncationPlan(n, tail)
        n += 1


def psi_plan(q: ArbReal) -> TruncationPlan:
    _check_q(q)
    eps = _eps(q.prec)
    aq = abs(q)
    if aq.is_zero():
        return TruncationPlan(0, aq)
    target = _neg_log(eps)
    n = max(1, math.isqrt(int(2 * target / _neg_log(aq))) - 2)
    while True:
        tail = aq ** ((n + 1) * (n + 2) // 2) / (1 - aq)
        if tail < eps:
            return TruncationPlan(n, tail)
        n += 1


def pochhammer_plan(x: ArbReal, q: ArbReal, eps: ArbReal | None = None) -> TruncationPlan:
    """Last factor index K so that prod_{k>K}(1 - x q^k) = 1 + delta, |delta| <= eps.

    Uses |log prod_{k>K}(1 - x q^k)| <= 2|x||q|^(K+1)/(1 - |q|), valid once
    every remaining factor has |x q^k| <= 1/2.
    """
    _check_q(q)
    if eps is None:
        eps = _eps(q.prec)
    ax, aq = abs(x), abs(q)
    if ax.is_zero() or aq.is_zero():
        return TruncationPlan(0, ax * aq)
    k = max(0, int((_neg_log(eps) - _neg_log(ax)) / _neg_log(aq)) - 2)
    while True:
        tail = 2 * ax * aq ** (k + 1) / (1 - aq)
        if tail < eps and 2 * ax * aq ** (k + 1) <= 1:
            return TruncationPlan(k, tail)
        k += 1


# -- products ----------------------------------------------------------

def pochhammer_inf(x: ArbReal, q: ArbReal) -> ArbReal:
    """(x; q)_inf = prod_{k>=0} (1 - x q^k)."""
    plan = pochhammer_plan(x, q)
    result = ArbReal.from_int(1, q.prec)
    term = x
    for _ in range(plan.n_max + 1):
        result = result * (1 - term)
        term = term * q
    return result


def theta_f_product(a: ArbReal, b: ArbReal) -> ArbReal:
    """f(a, b) through the Jacobi triple product (-a; ab)(-b; ab)(ab; ab)."""
    ab = a * b
    if abs(ab) >= 1:
        raise DomainError("f(a, b) needs |ab| < 1")
    return pochhammer_inf(-a, ab) * pochhammer_inf(-b, ab) * pochhammer_inf(ab, ab)


def phi_product(q: ArbReal) -> ArbReal:
    """phi(q) = (-q; q^2)^2 (q^2; q^2)."""
    q2 = q * q
    h = pochhammer_inf(-q, q2)
    return h * h * pochhammer_inf(q2, q2)


def psi_product(q: ArbReal) -> ArbReal:
    """psi(q) = (-q; q^2)(q^4; q^4), the triple product of f(q, q^3)."""
    q4 = q ** 4
    return pochhammer_inf(-q, q * q) * pochhammer_inf(q4, q4)


# -- series ------------------------------------------------------------

def theta_f(a: ArbReal, b: ArbReal) -> ArbReal:
    """Bilateral sum f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2), |ab| < 1.

    Summed outward from n = 0.  The term ratios are a^(k+1) b^k (positive
    side) and a^k b^(k+1) (negative side), so each side is stopped once its
    ratio is below 1/2 and its current term below epsilon, which bounds the
    remaining tail by that term.
    """
    prec = a.prec
    if abs(a * b) >= 1:
        raise DomainError("f(a, b) needs |ab| < 1")
    eps = _eps(prec)
    total = ArbReal.from_int(1, prec)
    pos = a              # n = 1
    neg = b              # n = -1
    ratio_pos = a * b    # a^(k+1) b^k at k = 1
    ratio_neg = a * b * b
    ab = a * b
    half = ArbReal.from_rational(Fraction(1, 2), prec)
    pos_done = neg_done = False
    while not (pos_done and neg_done):
        if not pos_done:
            total = total + pos
            pos = pos * ratio_pos * a
            ratio_pos = ratio_pos * ab
            pos_done = abs(pos) < eps and abs(ratio_pos * a) < half
        if not neg_done:
            total = total + neg
            neg = neg * ratio_neg
            ratio_neg = ratio_neg * ab
            neg_done = abs(neg) < eps and abs(ratio_neg) < half
    return total


def phi(q: ArbReal) -> ArbReal:
    """phi(q) = 1 + 2 sum_{n>=1} q^(n^2); negative q is summed with signs."""
    plan = phi_plan(q)
    total = ArbReal.from_int(0, q.prec)
    term = q            # q^(n^2) at n = 1
    step = q ** 3       # q^(2n+1)
    q2 = q * q
    for _ in range(plan.n_max):
        total = total + term
        term = term * step
        step = step * q2
    return 1 + 2 * total


def psi(q: ArbReal) -> ArbReal:
    """psi(q) = sum_{n>=0} q^(n(n+1)/2)."""
    plan = psi_plan(q)
    total = ArbReal.from_int(1, q.prec)
    term = ArbReal.from_int(1, q.prec)
    qn = ArbReal.from_int(1, q.prec)
    for _ in range(plan.n_max):
        qn = qn * q
        term = term * qn
        total = total + term
    return total
