"""Moduli of given degrees from the nome, the multiplier and Russell's P, Q, R."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SignUndefined
from .hypergeom import hyp2f1_half
from .numerics import ArbReal, Precision, root_pow
from .qseries import phi, psi


def q_value(q, prec: Precision) -> ArbReal:
    """Lift an exact rational (Fraction, int or "p/q" string) or ArbReal to ``prec``."""
    if isinstance(q, ArbReal):
        return q if q.prec == prec else q.with_precision(prec)
    if isinstance(q, str):
        return ArbReal.from_str(q, prec)
    return ArbReal.from_rational(Fraction(q), prec)


def q_power(q, k: int, prec: Precision) -> ArbReal:
    """q**k, formed exactly before rounding when q is rational."""
    if isinstance(q, ArbReal):
        return q_value(q, prec) ** k
    if isinstance(q, str):
        q = Fraction(q)
    return ArbReal.from_rational(Fraction(q) ** k, prec)


def _check_open_unit(q: ArbReal) -> None:
    if q.sign() <= 0 or q >= 1:
        raise DomainError(f"q must lie in (0, 1), got {q!r}")


def alpha_from_q(q: ArbReal) -> ArbReal:
    """alpha = 16 q psi(q^2)^4 / phi(q)^4."""
    _check_open_unit(q)
    return 16 * q * (psi(q * q) / phi(q)) ** 4


def alpha_complement_from_q(q: ArbReal) -> ArbReal:
    """1 - alpha = (phi(-q) / phi(q))^4, without cancellation."""
    _check_open_unit(q)
    return (phi(-q) / phi(q)) ** 4


def alpha_from_q_eighth(q: ArbReal) -> ArbReal:
    """alpha through eighth roots: (sqrt(2) q^(1/8) psi(q) / phi(q))^8 = 16 q psi(q)^8 / phi(q)^8."""
    _check_open_unit(q)
    return 16 * q * (psi(q) / phi(q)) ** 8


def alpha_complement_from_q_eighth(q: ArbReal) -> ArbReal:
    """1 - alpha = (phi(-q^2) / phi(q))^8."""
    _check_open_unit(q)
    return (phi(-(q * q)) / phi(q)) ** 8


@dataclass(frozen=True)
class ModuliPair:
    """Moduli alpha (from q^n1) and beta (from q^n2) with their eighth-root companions.

    ``x = (alpha*beta)**(1/8)`` and ``y = ((1-alpha)(1-beta))**(1/8)``.  The
    complements are evaluated directly from theta quotients.
    """

    q: ArbReal
    n1: int
    n2: int
    alpha: ArbReal
    beta: ArbReal
    alpha_c: ArbReal
    beta_c: ArbReal
    x: ArbReal
    y: ArbReal

    @property
    def degree(self) -> Fraction:
        return Fraction(self.n2, self.n1)


def _check_degrees(n1: int, n2: int) -> None:
    if not (0 < n1 < n2) or math.gcd(n1, n2) != 1:
        raise DomainError(f"degrees must be coprime with 0 < n1 < n2, got ({n1}, {n2})")


def moduli_pair(q, n1: int, n2: int, prec: Precision) -> ModuliPair:
    _check_degrees(n1, n2)
    qv = q_value(q, prec)
    _check_open_unit(qv)
    q1, q2 = q_power(q, n1, prec), q_power(q, n2, prec)
    if q2.is_zero():
        raise DomainError("q^n2 underflows")
    alpha, beta = alpha_from_q(q1), alpha_from_q(q2)
    alpha_c, beta_c = alpha_complement_from_q(q1), alpha_complement_from_q(q2)
    x = root_pow(alpha * beta, 1, 8)
    y = root_pow(alpha_c * beta_c, 1, 8)
    return ModuliPair(qv, n1, n2, alpha, beta, alpha_c, beta_c, x, y)


@dataclass(frozen=True)
class MultiplierSample:
    """m = z1/zn with z1 = phi(q^n1)^2, zn = phi(q^n2)^2.

    When the moduli are small enough for the hypergeometric series,
    ``z1_hyp`` and ``zn_hyp`` hold 2F1(1/2,1/2;1;alpha) and 2F1(...;beta).
    """

    m: ArbReal
    z1: ArbReal
    zn: ArbReal
    degree: Fraction
    z1_hyp: ArbReal | None = None
    zn_hyp: ArbReal | None = None


HYPERGEOMETRIC_Q_LIMIT = Fraction(1, 10)


def multiplier(q, n1: int, n2: int, prec: Precision, cross_check: bool = False) -> MultiplierSample:
    _check_degrees(n1, n2)
    _check_open_unit(q_value(q, prec))
    q1, q2 = q_power(q, n1, prec), q_power(q, n2, prec)
    z1, zn = phi(q1) ** 2, phi(q2) ** 2
    sample = MultiplierSample(z1 / zn, z1, zn, Fraction(n2, n1))
    if cross_check and q1 <= HYPERGEOMETRIC_Q_LIMIT:
        return MultiplierSample(
            sample.m, z1, zn, sample.degree,
            hyp2f1_half(alpha_from_q(q1)), hyp2f1_half(alpha_from_q(q2)),
        )
    return sample


@dataclass(frozen=True)
class RussellTriple:
    P: ArbReal
    Q: ArbReal
    R: ArbReal
    sign: int


def russell_sign(n1: int, n2: int) -> int:
    if (n1 + n2) % 8:
        raise SignUndefined(f"8 does not divide {n1} + {n2}")
    return -1 if ((n1 + n2) // 8) % 2 else 1


RUSSELL_PAIRS = ((1, 15), (3, 5))


def russell_triple(mp: ModuliPair) -> RussellTriple:
    """P = 1 + s(x + y), Q = 4(x + y + s*x*y), R = 4xy with s = (-1)^((n1+n2)/8).

    Only the pairs in :data:`RUSSELL_PAIRS` are accepted; the sign formula
    happens to be defined for others such as (1, 7), but the form is not
    known to describe their modular equations.
    """
    if (mp.n1, mp.n2) not in RUSSELL_PAIRS:
        raise SignUndefined(f"Russell form is only set up for {RUSSELL_PAIRS}, got ({mp.n1}, {mp.n2})")
    s = russell_sign(mp.n1, mp.n2)
    x, y = mp.x, mp.y
    return RussellTriple(1 + s * (x + y), 4 * (x + y + s * x * y), 4 * x * y, s)
