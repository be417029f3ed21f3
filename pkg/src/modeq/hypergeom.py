"""The complete elliptic period 2F1(1/2, 1/2; 1; x), the period ratio and the nome."""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .numerics import ArbReal, pi

# Above this argument the direct series needs too many terms and the
# arithmetic-geometric mean is used instead.
SERIES_LIMIT = Fraction(9, 10)


def _check_modulus(x: ArbReal) -> None:
    if x.sign() < 0 or x >= 1:
        raise DomainError(f"2F1(1/2,1/2;1;x) needs 0 <= x < 1, got {x!r}")


def hyp2f1_half(x: ArbReal) -> ArbReal:
    """Sum of ((1/2)_k / k!)^2 x^k.

    Terms follow term_{k+1} = term_k * x * ((2k+1)/(2k+2))^2.  Since the
    coefficient ratio is below 1, everything after the current term is
    bounded by term * x / (1 - x); summation stops when that bound drops
    below the working epsilon relative to the partial sum.
    """
    _check_modulus(x)
    prec = x.prec
    eps = ArbReal.from_int(2, prec) ** -(prec.working_bits + 4)
    total = ArbReal.from_int(1, prec)
    term = ArbReal.from_int(1, prec)
    geometric = x / (1 - x)
    k = 0
    while True:
        term = term * x * Fraction(2 * k + 1, 2 * k + 2) ** 2
        k += 1
        total = total + term
        if term * geometric < eps * total:
            return total


def hyp2f1_half_agm(x: ArbReal) -> ArbReal:
    """2F1(1/2, 1/2; 1; x) = 1 / AGM(1, sqrt(1 - x)).

    Converges quadratically for every x in [0, 1); used where the power
    series is impractical and as an independent check on it.
    """
    _check_modulus(x)
    return 1 / agm(ArbReal.from_int(1, x.prec), (1 - x).sqrt())


def hyp2f1_half_complement(x: ArbReal, complement: ArbReal | None = None) -> ArbReal:
    """2F1(1/2, 1/2; 1; 1 - x).

    ``complement`` may supply an accurately known 1 - x.  The series is used
    while 1 - x stays below :data:`SERIES_LIMIT`; otherwise AGM(1, sqrt(x)),
    which never forms 1 - x and so keeps full accuracy for tiny x.
    """
    _check_modulus(x)
    if x.is_zero():
        raise DomainError("2F1(1/2,1/2;1;1) diverges")
    if complement is None:
        complement = 1 - x
    if complement <= SERIES_LIMIT:
        return hyp2f1_half(complement)
    return 1 / agm(ArbReal.from_int(1, x.prec), x.sqrt())


def agm(a: ArbReal, b: ArbReal) -> ArbReal:
    if a.sign() <= 0 or b.sign() <= 0:
        raise DomainError("AGM needs positive arguments")
    tol = a.ulp() * 4
    for _ in range(10_000):
        if abs(a - b) <= tol:
            return (a + b) / 2
        a, b = (a + b) / 2, (a * b).sqrt()
    raise ArithmeticError("AGM failed to converge")


def _direct(x: ArbReal, complement: ArbReal | None) -> ArbReal:
    if x <= SERIES_LIMIT:
        return hyp2f1_half(x)
    if complement is None:
        complement = 1 - x
    return 1 / agm(ArbReal.from_int(1, x.prec), complement.sqrt())


def period_ratio(alpha: ArbReal, complement: ArbReal | None = None) -> ArbReal:
    """2F1(1/2,1/2;1;1-alpha) / 2F1(1/2,1/2;1;alpha) for 0 < alpha < 1.

    ``complement`` optionally gives 1 - alpha computed independently, which
    preserves accuracy when alpha is within rounding of 1 or 0.
    """
    _check_modulus(alpha)
    if alpha.is_zero():
        raise DomainError("period ratio is infinite at alpha = 0")
    return hyp2f1_half_complement(alpha, complement) / _direct(alpha, complement)


def nome(alpha: ArbReal, complement: ArbReal | None = None) -> ArbReal:
    """q = exp(-pi * period_ratio(alpha))."""
    return (-pi(alpha.prec) * period_ratio(alpha, complement)).exp()
