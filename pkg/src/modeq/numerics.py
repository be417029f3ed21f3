"""Arbitrary-precision real arithmetic with explicit precision contexts.

Values are raw binary floating-point tuples ``(sign, mantissa, exponent,
bitcount)`` handled by :mod:`mpmath.libmp`.  Every operation receives its
working precision from the operands rather than from a global context, so
values can be shared freely between threads.

Error bounds at the working precision ``bits + guard_bits``:

* ``+ - * /`` and ``sqrt`` are correctly rounded (at most 1/2 ulp).
* ``exp``, ``log``, ``root_pow`` and ``pi`` are within 1 ulp.
* Integer powers through ``**`` are within ``2 * log2(n)`` ulp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import libmp

from .errors import DivisionByZero, DomainError, PrecisionMismatch

_RND = libmp.round_nearest
_LOG10_2 = math.log10(2)


@dataclass(frozen=True)
class Precision:
    """Binary working precision.

    ``bits`` is the precision results are reported at; ``guard_bits`` are
    carried internally on top of it.
    """

    bits: int
    guard_bits: int = 64

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError(f"precision must be at least 64 bits, got {self.bits}")
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be non-negative")

    @classmethod
    def from_digits(cls, digits: int, guard_bits: int = 64) -> Precision:
        return cls(math.ceil(digits / _LOG10_2), guard_bits)

    @property
    def working_bits(self) -> int:
        return self.bits + self.guard_bits

    @property
    def digits(self) -> int:
        """Decimal digits D = floor(bits * log10(2))."""
        return int(self.bits * _LOG10_2)

    @property
    def default_tolerance_exponent(self) -> int:
        return self.digits - 10

    def tolerance(self, exponent: int | None = None) -> ArbReal:
        """10**-exponent, defaulting to 10**-(D - 10)."""
        if exponent is None:
            exponent = self.default_tolerance_exponent
        return ArbReal.from_rational(Fraction(1, 10**exponent), self)

    def boosted(self, extra_bits: int) -> Precision:
        return Precision(self.bits + extra_bits, self.guard_bits)


Number = Union[int, Fraction]


class ArbReal:
    """An immutable real number computed under a :class:`Precision`."""

    __slots__ = ("_v", "prec")

    def __init__(self, raw: tuple, prec: Precision):
        object.__setattr__(self, "_v", raw)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("ArbReal is immutable")

    # -- construction -------------------------------------------------
    @classmethod
    def from_int(cls, n: int, prec: Precision) -> ArbReal:
        return cls(libmp.from_int(n, prec.working_bits, _RND), prec)

    @classmethod
    def from_rational(cls, r: Number, prec: Precision) -> ArbReal:
        r = Fraction(r)
        return cls(libmp.from_rational(r.numerator, r.denominator, prec.working_bits, _RND), prec)

    @classmethod
    def from_str(cls, s: str, prec: Precision) -> ArbReal:
        """Parse ``"p/q"`` or a decimal literal, read as the exact rational it names."""
        try:
            return cls.from_rational(Fraction(s.strip()), prec)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {s!r}") from exc

    @classmethod
    def coerce(cls, value, prec: Precision) -> ArbReal:
        if isinstance(value, ArbReal):
            if value.prec != prec:
                raise PrecisionMismatch(f"{value.prec} vs {prec}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a number here")
        if isinstance(value, int):
            return cls.from_int(value, prec)
        if isinstance(value, Fraction):
            return cls.from_rational(value, prec)
        raise TypeError(f"cannot convert {type(value).__name__} to ArbReal exactly")

    def with_precision(self, prec: Precision) -> ArbReal:
        return ArbReal(libmp.mpf_pos(self._v, prec.working_bits, _RND), prec)

    # -- inspection ---------------------------------------------------
    @property
    def raw(self) -> tuple:
        return self._v

    @property
    def mantissa(self) -> int:
        sign, man, exp, _ = self._v
        return -man if sign else man

    @property
    def exponent(self) -> int:
        return self._v[2]

    def sign(self) -> int:
        return libmp.mpf_sign(self._v)

    def is_zero(self) -> bool:
        return self._v == libmp.fzero

    def is_zero_within(self, tol) -> bool:
        return abs(self) < tol

    def ulp(self) -> ArbReal:
        """One unit in the last place of this value at working precision."""
        if self.is_zero():
            exp = -self.prec.working_bits
        else:
            _, man, e, bc = self._v
            exp = e + bc - self.prec.working_bits
        return ArbReal(libmp.from_man_exp(1, exp), self.prec)

    def rounded(self) -> ArbReal:
        """This value rounded to the reported precision ``bits``."""
        return ArbReal(libmp.mpf_pos(self._v, self.prec.bits, _RND), self.prec)

    def to_fraction(self) -> Fraction:
        p, q = libmp.to_rational(self._v)
        return Fraction(p, q)

    def to_string(self, digits: int | None = None, strip_zeros: bool = True) -> str:
        if digits is None:
            digits = self.prec.digits
        return libmp.to_str(self._v, digits, strip_zeros=strip_zeros)

    def to_sci(self, sig: int = 6) -> str:
        """Scientific notation with ``sig`` significant digits, e.g. ``1.23457e-95``."""
        if self.is_zero():
            return "0.0"
        text = libmp.to_str(self._v, sig, strip_zeros=False, min_fixed=1, max_fixed=0,
                            show_zero_exponent=True)
        mant, exp = text.split("e")
        return f"{mant}e{int(exp):+03d}"

    def __float__(self) -> float:
        return libmp.to_float(self._v)

    def __repr__(self) -> str:
        return f"ArbReal('{self.to_string(min(self.prec.digits, 30))}', bits={self.prec.bits})"

    def __str__(self) -> str:
        return self.to_string()

    def __hash__(self):
        return hash((self._v, self.prec))

    # -- arithmetic ---------------------------------------------------
    def _other(self, other) -> tuple:
        return ArbReal.coerce(other, self.prec)._v

    def _wrap(self, raw) -> ArbReal:
        return ArbReal(raw, self.prec)

    def __add__(self, other):
        return self._wrap(libmp.mpf_add(self._v, self._other(other), self.prec.working_bits, _RND))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(libmp.mpf_sub(self._v, self._other(other), self.prec.working_bits, _RND))

    def __rsub__(self, other):
        return self._wrap(libmp.mpf_sub(self._other(other), self._v, self.prec.working_bits, _RND))

    def __mul__(self, other):
        return self._wrap(libmp.mpf_mul(self._v, self._other(other), self.prec.working_bits, _RND))

    __rmul__ = __mul__

    def __truediv__(self, other):
        d = self._other(other)
        if d == libmp.fzero:
            raise DivisionByZero("division by zero")
        return self._wrap(libmp.mpf_div(self._v, d, self.prec.working_bits, _RND))

    def __rtruediv__(self, other):
        if self.is_zero():
            raise DivisionByZero("division by zero")
        return self._wrap(libmp.mpf_div(self._other(other), self._v, self.prec.working_bits, _RND))

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("only integer powers; use root_pow for rational exponents")
        if n < 0:
            if self.is_zero():
                raise DivisionByZero("zero to a negative power")
            return 1 / self ** (-n)
        return self._wrap(libmp.mpf_pow_int(self._v, n, self.prec.working_bits, _RND))

    def __neg__(self):
        return self._wrap(libmp.mpf_neg(self._v))

    def __pos__(self):
        return self

    def __abs__(self):
        return self._wrap(libmp.mpf_abs(self._v))

    # -- comparison ---------------------------------------------------
    def _cmp(self, other) -> int:
        if isinstance(other, ArbReal):
            return libmp.mpf_cmp(self._v, other._v)
        return libmp.mpf_cmp(self._v, self._other(other))

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- elementary functions -----------------------------------------
    def sqrt(self) -> ArbReal:
        if self.sign() < 0:
            raise DomainError("sqrt of a negative number")
        return self._wrap(libmp.mpf_sqrt(self._v, self.prec.working_bits, _RND))

    def exp(self) -> ArbReal:
        return self._wrap(libmp.mpf_exp(self._v, self.prec.working_bits, _RND))

    def log(self) -> ArbReal:
        if self.sign() <= 0:
            raise DomainError("log of a non-positive number")
        return self._wrap(libmp.mpf_log(self._v, self.prec.working_bits, _RND))

    def root_pow(self, p: int, r: int) -> ArbReal:
        return root_pow(self, p, r)


def root_pow(a: ArbReal, p: int, r: int) -> ArbReal:
    """The real value of a**(p/r); the non-negative branch when r is even."""
    if r <= 0:
        raise ValueError("root index must be positive")
    if a.sign() < 0 and r % 2 == 0:
        raise DomainError(f"even root ({r}) of a negative number")
    if a.is_zero() and p < 0:
        raise DivisionByZero("zero to a negative power")
    wp = a.prec.working_bits
    # extra bits absorb the error of the integer power before the root
    extra = 2 * max(abs(p), 1).bit_length() + 8
    powered = libmp.mpf_pow_int(a.raw, abs(p), wp + extra, _RND)
    if p < 0:
        powered = libmp.mpf_div(libmp.fone, powered, wp + extra, _RND)
    # odd root of a negative value: the real root, -(|a|^p)^(1/r)
    negative = libmp.mpf_sign(powered) < 0
    root = libmp.mpf_nthroot(libmp.mpf_abs(powered), r, wp, _RND)
    return ArbReal(libmp.mpf_neg(root) if negative else root, a.prec)


def sqrt(a: ArbReal) -> ArbReal:
    return a.sqrt()


def exp(a: ArbReal) -> ArbReal:
    return a.exp()


def log(a: ArbReal) -> ArbReal:
    return a.log()


def pi(prec: Precision) -> ArbReal:
    return ArbReal(libmp.mpf_pi(prec.working_bits, _RND), prec)


def const(value, prec: Precision) -> ArbReal:
    """Lift an int, Fraction, rational string or ArbReal into ``prec``."""
    if isinstance(value, str):
        return ArbReal.from_str(value, prec)
    return ArbReal.coerce(value, prec)
