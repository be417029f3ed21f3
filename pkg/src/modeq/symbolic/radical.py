"""The field Q(t)(u, v) with u^2 = p(t) and v^2 = t.

An element is c0 + c1*u + c2*v + c3*u*v with rational-function
coordinates in t; products are reduced with the two relations, so the
coordinates are a normal form.  While neither p(t), t nor t*p(t) is a
square in Q(t) the extension has degree 4 and an element is zero exactly
when all four coordinates are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .univariate import ONE, T, RatFunc, UPoly, up, up_deriv, up_eval, up_str


@dataclass(frozen=True)
class Tower:
    """u = sqrt(p(t)), v = sqrt(t)."""

    radicand: UPoly

    @classmethod
    def of(cls, coeffs) -> Tower:
        return cls(up(coeffs))

    @property
    def p(self) -> RatFunc:
        return RatFunc(self.radicand, ONE, reduce=False)

    @property
    def t(self) -> RatFunc:
        return RatFunc(T, ONE, reduce=False)

    def const(self, c) -> RadElem:
        return RadElem(self, (RatFunc.coerce(c), _Z, _Z, _Z))

    def rational(self, r: RatFunc) -> RadElem:
        return RadElem(self, (r, _Z, _Z, _Z))

    @property
    def u(self) -> RadElem:
        return RadElem(self, (_Z, _ONE, _Z, _Z))

    @property
    def v(self) -> RadElem:
        return RadElem(self, (_Z, _Z, _ONE, _Z))

    @property
    def uv(self) -> RadElem:
        return RadElem(self, (_Z, _Z, _Z, _ONE))

    @property
    def tvar(self) -> RadElem:
        return self.rational(self.t)

    def describe(self) -> str:
        return f"u^2 = {up_str(self.radicand)}, v^2 = t"


_Z = RatFunc.const(0)
_ONE = RatFunc.const(1)


class RadElem:
    __slots__ = ("tower", "c")

    def __init__(self, tower: Tower, coords):
        self.tower = tower
        self.c = tuple(coords)

    def _lift(self, other) -> RadElem:
        if isinstance(other, RadElem):
            if other.tower != self.tower:
                raise ValueError("elements of different towers")
            return other
        return self.tower.const(other) if not isinstance(other, RatFunc) else self.tower.rational(other)

    def is_zero(self) -> bool:
        return all(ci.is_zero() for ci in self.c)

    def is_rational(self) -> bool:
        """True when only the c0 coordinate is nonzero."""
        return all(ci.is_zero() for ci in self.c[1:])

    def __add__(self, other) -> RadElem:
        o = self._lift(other)
        return RadElem(self.tower, (a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self) -> RadElem:
        return RadElem(self.tower, (-a for a in self.c))

    def __sub__(self, other) -> RadElem:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> RadElem:
        return self._lift(other) - self

    def __mul__(self, other) -> RadElem:
        if isinstance(other, (int, Fraction)):
            return RadElem(self.tower, (a * other for a in self.c))
        o = self._lift(other)
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        p, t = self.tower.p, self.tower.t
        c0 = a0 * b0 + p * (a1 * b1) + t * (a2 * b2) + p * t * (a3 * b3)
        c1 = a0 * b1 + a1 * b0 + t * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + p * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return RadElem(self.tower, (c0, c1, c2, c3))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RadElem:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.tower.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj_v(self) -> RadElem:
        c0, c1, c2, c3 = self.c
        return RadElem(self.tower, (c0, c1, -c2, -c3))

    def conj_u(self) -> RadElem:
        c0, c1, c2, c3 = self.c
        return RadElem(self.tower, (c0, -c1, c2, -c3))

    def inverse(self) -> RadElem:
        """1/z = conj_v(z) * conj_u(w) / N with w = z*conj_v(z) and N = w*conj_u(w) in Q(t)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        cv = self.conj_v()
        w = self * cv
        cu = w.conj_u()
        norm = w * cu
        if not norm.is_rational():
            raise ArithmeticError("norm left the base field")
        return cv * cu * (1 / norm.c[0])

    def __truediv__(self, other) -> RadElem:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> RadElem:
        return self._lift(other) * self.inverse()

    def deriv(self) -> RadElem:
        """d/dt with u' = p'/(2p) u, v' = v/(2t), (uv)' = (p'/(2p) + 1/(2t)) uv."""
        p = self.tower.p
        du = RatFunc(up_deriv(self.tower.radicand)) / (2 * p)
        dv = 1 / (2 * self.tower.t)
        c0, c1, c2, c3 = self.c
        return RadElem(self.tower, (
            c0.deriv(),
            c1.deriv() + c1 * du,
            c2.deriv() + c2 * dv,
            c3.deriv() + c3 * (du + dv),
        ))

    def evaluate(self, t_value):
        """Numeric value at t = t_value (ArbReal) on the positive branches of u and v."""
        u = up_eval(self.tower.radicand, t_value).sqrt()
        v = t_value.sqrt()
        c0, c1, c2, c3 = (ci.evaluate(t_value) for ci in self.c)
        return c0 + c1 * u + c2 * v + c3 * u * v

    def __eq__(self, other):
        if not isinstance(other, RadElem):
            try:
                other = self._lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.tower == other.tower and (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        names = ("", "u", "v", "u*v")
        parts = [f"({ci})" + (f"*{n}" if n else "") for ci, n in zip(self.c, names) if not ci.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__
