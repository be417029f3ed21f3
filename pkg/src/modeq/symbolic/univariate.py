"""Dense polynomials and rational functions in the single variable t.

Polynomials are tuples of Fractions, lowest degree first, with no trailing
zeros; ``()`` is zero.  They back the coordinates of radical-tower elements,
where the sparse multivariate :class:`Poly` would be needlessly slow.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .poly import Poly

UPoly = tuple

ZERO: UPoly = ()
ONE: UPoly = (Fraction(1),)
T: UPoly = (Fraction(0), Fraction(1))


def up(coeffs: Sequence) -> UPoly:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def up_deg(a: UPoly) -> int:
    return len(a) - 1


def up_add(a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return up(out)


def up_neg(a: UPoly) -> UPoly:
    return tuple(-c for c in a)


def up_sub(a: UPoly, b: UPoly) -> UPoly:
    return up_add(a, up_neg(b))


def up_scale(a: UPoly, c) -> UPoly:
    c = Fraction(c)
    if not c:
        return ZERO
    return tuple(x * c for x in a)


def up_mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return up(out)


def up_pow(a: UPoly, n: int) -> UPoly:
    result = ONE
    for _ in range(n):
        result = up_mul(result, a)
    return result


def up_divmod(a: UPoly, b: UPoly) -> tuple:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(rem) - 1 < db:
        return ZERO, up(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lb
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return up(quot), up(rem[:db])


def up_monic(a: UPoly) -> UPoly:
    return up_scale(a, 1 / a[-1]) if a else a


def _primitive(a: UPoly) -> list:
    """Integer coefficients with content 1 and positive leading term, same roots as ``a``."""
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    sign = -1 if ints[-1] < 0 else 1
    return [sign * c // g for c in ints]


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer polynomials, trailing zeros stripped."""
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lb * x for x in rem]
        for j, y in enumerate(b):
            rem[shift + j] -= c * y
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def up_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor, by a primitive pseudo-remainder sequence."""
    if not b:
        return up_monic(a)
    if not a:
        return up_monic(b)
    pa, pb = _primitive(a), _primitive(b)
    while pb:
        r = _int_prem(pa, pb)
        pa, pb = pb, (_primitive(up(r)) if r else [])
    return up_monic(up(pa))


def up_deriv(a: UPoly) -> UPoly:
    return up([i * c for i, c in enumerate(a)][1:])


def up_eval(a: UPoly, t):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


def up_sqrt(a: UPoly) -> UPoly | None:
    """The polynomial s with s*s == a and positive leading coefficient, or None."""
    if not a:
        return ZERO
    if len(a) % 2 == 0:
        return None
    lead = _fraction_sqrt(a[-1])
    if lead is None:
        return None
    n = (len(a) - 1) // 2
    # top-down: coefficient of t^(n+k) in s^2 fixes s_k, k = n-1 .. 0
    s = [Fraction(0)] * (n + 1)
    s[n] = lead
    for k in range(n - 1, -1, -1):
        acc = a[n + k]
        for i in range(k + 1, n):
            j = n + k - i
            if k < j <= n:
                acc -= s[i] * s[j]
        s[k] = acc / (2 * lead)
    cand = up(s)
    return cand if up_mul(cand, cand) == a else None


def _fraction_sqrt(c: Fraction) -> Fraction | None:
    from math import isqrt

    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def up_valuation(a: UPoly) -> int:
    """Largest k with t^k | a."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("valuation of zero")


def up_str(a: UPoly, var: str = "t") -> str:
    return str(to_poly(a, var))


def to_poly(a: UPoly, var: str = "t") -> Poly:
    return Poly({((var, i),) if i else (): c for i, c in enumerate(a)})


def from_poly(p: Poly, var: str = "t") -> UPoly:
    extra = p.variables() - {var}
    if extra:
        raise ValueError(f"not univariate in {var}: {sorted(extra)}")
    out = [Fraction(0)] * (max(p.degree(var), 0) + 1)
    for mono, c in p.terms.items():
        out[dict(mono).get(var, 0)] = c
    return up(out)


class RatFunc:
    """Reduced quotient num/den of polynomials in t with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly = ONE, reduce: bool = True):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(up([c]), ONE, reduce=False)

    @classmethod
    def coerce(cls, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, tuple):
            return cls(other, ONE, reduce=False)
        return cls.const(other)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(up_add(self.num, o.num), self.den)
        return RatFunc(up_add(up_mul(self.num, o.den), up_mul(o.num, self.den)),
                       up_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(up_neg(self.num), self.den, reduce=False)

    def __sub__(self, other) -> RatFunc:
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> RatFunc:
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        if not self.num or not o.num:
            return RatFunc(ZERO, ONE, reduce=False)
        return RatFunc(up_mul(self.num, o.num), up_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        if not o.num:
            raise ZeroDivisionError("rational function division by zero")
        return RatFunc(up_mul(self.num, o.den), up_mul(self.den, o.num))

    def __rtruediv__(self, other) -> RatFunc:
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return RatFunc(ONE) / self ** (-n)
        return RatFunc(up_pow(self.num, n), up_pow(self.den, n), reduce=False)

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def deriv(self) -> RatFunc:
        # (n/d)' = (n'd - nd') / d^2
        return RatFunc(up_sub(up_mul(up_deriv(self.num), self.den), up_mul(self.num, up_deriv(self.den))),
                       up_mul(self.den, self.den))

    def evaluate(self, t):
        return up_eval(self.num, t) / up_eval(self.den, t)

    def sqrt(self) -> RatFunc | None:
        """Exact square root with positive leading coefficients, when one exists."""
        # den is monic; a square num/den needs num*den square up to a square constant
        rn, rd = up_sqrt(self.num), up_sqrt(self.den)
        if rn is None or rd is None:
            return None
        return RatFunc(rn, rd)

    def __str__(self):
        if self.den == ONE:
            return f"{up_str(self.num)}"
        return f"({up_str(self.num)}) / ({up_str(self.den)})"

    __repr__ = __str__


def _reduce(num: UPoly, den: UPoly) -> tuple:
    if not num:
        return ZERO, ONE
    if len(den) == 1:
        return up_scale(num, 1 / den[0]), ONE
    # cancel common powers of t cheaply before the general gcd
    k = min(up_valuation(num), up_valuation(den))
    if k:
        num, den = num[k:], den[k:]
    if len(den) > 1 and len(num) > 1:
        g = up_gcd(num, den)
        if len(g) > 1:
            num, den = up_divmod(num, g)[0], up_divmod(den, g)[0]
    lead = den[-1]
    return up_scale(num, 1 / lead), up_scale(den, 1 / lead)
