"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs with positive
exponents, sorted by a fixed variable ranking, so every polynomial has a
single canonical term map and equality is map equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

_RANK = {name: i for i, name in enumerate(("x", "y", "t", "rho", "P", "Q", "R"))}


def _key(var: str):
    return (_RANK.get(var, len(_RANK)), var)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items(), key=lambda item: _key(item[0])))


def _mono_div(a: tuple, b: tuple) -> tuple | None:
    """a / b when b divides a, else None."""
    da = dict(a)
    for v, e in b:
        have = da.get(v, 0)
        if have < e:
            return None
        if have == e:
            del da[v]
        else:
            da[v] = have - e
    return tuple(sorted(da.items(), key=lambda item: _key(item[0])))


def _as_fraction(c) -> Fraction:
    if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, not {type(c).__name__}")


class Poly:
    """Immutable polynomial; build with :meth:`var` and arithmetic."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                mono = tuple(sorted(((v, e) for v, e in mono if e), key=lambda item: _key(item[0])))
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> Poly:
        c = _as_fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def coerce(cls, other) -> Poly:
        return other if isinstance(other, Poly) else cls.const(other)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in mono) for mono in self._terms)
        return max(dict(mono).get(var, 0) for mono in self._terms)

    def coeff(self, **exponents: int) -> Fraction:
        """Coefficient of an exact monomial, e.g. ``p.coeff(x=2, y=1)``."""
        mono = tuple(sorted(((v, e) for v, e in exponents.items() if e), key=lambda it: _key(it[0])))
        return self._terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> Poly:
        other = Poly.coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            if not c:
                return Poly()
            return Poly._raw({m: v * c for m, v in self._terms.items()})
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                s = out.get(mono, 0) + ca * cb
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        c = _as_fraction(other)
        return self * (1 / c)

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution -----------------------------------
    def diff(self, var: str) -> Poly:
        out = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            e = d.get(var, 0)
            if e:
                if e == 1:
                    del d[var]
                else:
                    d[var] = e - 1
                out[tuple(sorted(d.items(), key=lambda it: _key(it[0])))] = c * e
        return Poly(out)

    def subs(self, mapping: Mapping[str, object]):
        """Substitute polynomials (or anything closed under + and *) for variables."""
        powers: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = mapping[v] ** e
            return powers[key]

        result = None
        for mono, c in self._terms.items():
            term = None
            rest = []
            for v, e in mono:
                if v in mapping:
                    factor = power(v, e)
                    term = factor if term is None else term * factor
                else:
                    rest.append((v, e))
            coeff_poly = Poly._raw({tuple(rest): c})
            if term is None:
                term = coeff_poly if rest else c
            elif rest:
                term = term * coeff_poly
            else:
                term = term * c
            result = term if result is None else result + term
        if result is None:
            return Poly()
        return Poly.const(result) if isinstance(result, (int, Fraction)) else result

    def evaluate(self, values: Mapping[str, object]):
        """Numeric value with every variable replaced; values may be Fraction or ArbReal."""
        total = 0
        for mono, c in self._terms.items():
            term = c
            for v, e in mono:
                term = term * values[v] ** e
            total = total + term
        return total

    # -- ordering and division ---------------------------------------
    def _order_key(self, mono: tuple, gens: Sequence[str], order: str):
        d = dict(mono)
        exps = tuple(d.get(g, 0) for g in gens)
        if order == "grlex":
            return (sum(exps), exps)
        if order == "lex":
            return exps
        raise ValueError(f"unknown monomial order {order!r}")

    def leading_monomial(self, gens: Sequence[str], order: str = "grlex") -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=lambda m: self._order_key(m, gens, order))

    def divide(self, divisors: Sequence[Poly], gens: Sequence[str] | None = None,
               order: str = "grlex") -> tuple:
        """Multivariate division: self = sum(q_i * d_i) + r.

        No monomial of ``r`` is divisible by any divisor's leading monomial.
        ``gens`` ranks the variables for the monomial order (default x > y >
        t > rho > ...).
        """
        if not divisors or any(d.is_zero() for d in divisors):
            raise ValueError("divisors must be non-empty and nonzero")
        if gens is None:
            allv = set(self.variables())
            for d in divisors:
                allv |= d.variables()
            gens = sorted(allv, key=_key)
        leads = [(d.leading_monomial(gens, order), d) for d in divisors]
        quotients = [dict() for _ in divisors]
        remainder: dict = {}
        p = dict(self._terms)
        while p:
            lm = max(p, key=lambda m: self._order_key(m, gens, order))
            lc = p[lm]
            for i, (dm, d) in enumerate(leads):
                factor = _mono_div(lm, dm)
                if factor is None:
                    continue
                coef = lc / d._terms[dm]
                quotients[i][factor] = quotients[i].get(factor, 0) + coef
                for mono, c in d._terms.items():
                    key = _mono_mul(mono, factor)
                    s = p.get(key, 0) - coef * c
                    if s:
                        p[key] = s
                    else:
                        p.pop(key, None)
                break
            else:
                remainder[lm] = lc
                del p[lm]
        return [Poly(q) for q in quotients], Poly._raw(remainder)

    # -- rendering ----------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        gens = sorted(self.variables(), key=_key)
        monos = sorted(self._terms, key=lambda m: self._order_key(m, gens, "grlex"))
        parts = []
        for mono in monos:
            c = self._terms[mono]
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def variables(names: str | Iterable[str]) -> tuple:
    """``x, y = variables("x y")``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return tuple(Poly.var(n) for n in names)
