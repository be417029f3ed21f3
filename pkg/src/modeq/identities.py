"""Catalog of modular-equation identities as residual functions of q.

Every entry returns both sides of its equation; the residual is their
difference.  Entries marked ``theta_only`` are built from theta quotients
alone, never from the moduli alpha, beta.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DomainError, GridRangeError, StepTooSmall
from .moduli import (
    ModuliPair,
    alpha_complement_from_q,
    alpha_complement_from_q_eighth,
    alpha_from_q,
    alpha_from_q_eighth,
    moduli_pair,
    q_power,
    q_value,
    russell_triple,
)
from .numerics import ArbReal, Precision, root_pow
from .qseries import phi, psi


class IdentityId(str, enum.Enum):
    EQ10 = "EQ10"
    EQ11 = "EQ11"
    EQ12 = "EQ12"
    EQ13 = "EQ13"
    EQ14 = "EQ14"
    EQ15_15 = "EQ15_15"
    EQ15_35 = "EQ15_35"
    EQ17 = "EQ17"
    EQ18 = "EQ18"
    EQ19 = "EQ19"
    EQ20 = "EQ20"
    EQ21 = "EQ21"
    EQ22_FD = "EQ22_FD"
    EQ28 = "EQ28"
    EQ33_T = "EQ33_T"
    EQ36 = "EQ36"
    EQ37 = "EQ37"
    EQ38 = "EQ38"
    EQ39A = "EQ39A"
    EQ39B = "EQ39B"
    EQ40 = "EQ40"
    EQ41 = "EQ41"
    EQ42 = "EQ42"

    def __str__(self):
        return self.value


DEFAULT_GRID = tuple(Fraction(s) for s in ("1/50", "1/20", "1/10", "3/20", "1/5", "1/4", "3/10"))
HYPERGEOMETRIC_GRID = DEFAULT_GRID[:3]
LIMIT_Q = Fraction(1, 10**6)
LIMIT_TOLERANCE = Fraction(1, 10**4)
MAX_Q = Fraction(1, 2)


class _Terms:
    """Lazily evaluated theta values at one q, shared by the sides of an identity."""

    def __init__(self, q, prec: Precision):
        self.q = q
        self.prec = prec
        self._cache = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def c(self, value) -> ArbReal:
        return ArbReal.coerce(Fraction(value), self.prec)

    def root(self, base, p: int, r: int) -> ArbReal:
        return root_pow(self.c(base), p, r)

    def qp(self, k: int) -> ArbReal:
        return self._memo(("q", k), lambda: q_power(self.q, k, self.prec))

    def phi(self, k: int) -> ArbReal:
        """phi(q^k)."""
        return self._memo(("phi", k), lambda: phi(self.qp(k)))

    def phi_neg(self, k: int) -> ArbReal:
        """phi(-q^k)."""
        return self._memo(("phi-", k), lambda: phi(-self.qp(k)))

    def psi(self, k: int) -> ArbReal:
        return self._memo(("psi", k), lambda: psi(self.qp(k)))

    def pair(self, n1: int, n2: int) -> ModuliPair:
        return self._memo(("pair", n1, n2), lambda: moduli_pair(self.q, n1, n2, self.prec))

    def m(self, n1: int, n2: int) -> ArbReal:
        return (self.phi(n1) / self.phi(n2)) ** 2

    def sqrt_s(self, n1: int, n2: int) -> ArbReal:
        """sqrt((1 + sqrt(alpha beta) + sqrt((1-alpha)(1-beta))) / 2)."""
        mp = self.pair(n1, n2)
        inner = 1 + (mp.alpha * mp.beta).sqrt() + (mp.alpha_c * mp.beta_c).sqrt()
        return (inner / 2).sqrt()


Sides = tuple  # (lhs, rhs)


@dataclass(frozen=True)
class Identity:
    id: IdentityId
    pair: tuple
    label: str
    sides: Callable[[_Terms], Sides]
    theta_only: bool = False
    limit_value: Fraction | None = None


_CATALOG: dict = {}


def _identity(tag, pair, label, theta_only=False, limit=None):
    def register(fn):
        ident = IdentityId(tag)
        _CATALOG[ident] = Identity(ident, pair, label, fn, theta_only,
                                   None if limit is None else Fraction(limit))
        return fn
    return register


# -- degree 7 -------------------------------------------------------------

@_identity("EQ10", (1, 7), "degree 7 modular equation")
def _eq10(t: _Terms) -> Sides:
    mp = t.pair(1, 7)
    return mp.x + mp.y, t.c(1)


@_identity("EQ11", (1, 7), "degree 7 multiplier, moduli form", limit=-6)
def _eq11(t: _Terms) -> Sides:
    mp, m = t.pair(1, 7), t.m(1, 7)
    x, y = mp.x, mp.y
    x2 = root_pow(mp.alpha * mp.beta, 1, 4)
    y2 = root_pow(mp.alpha_c * mp.beta_c, 1, 4)
    return m - 7 / m, 2 * (x - y) * (2 + x2 + y2)


@_identity("EQ12", (1, 7), "degree 7 multiplier, theta form", theta_only=True, limit=-6)
def _eq12(t: _Terms) -> Sides:
    d = t.phi(1) * t.phi(7)
    lhs = t.phi(1) ** 2 / t.phi(7) ** 2 - 7 * t.phi(7) ** 2 / t.phi(1) ** 2
    first = 2 * t.qp(1) * t.psi(1) * t.psi(7) / d - t.phi_neg(2) * t.phi_neg(14) / d
    second = 2 + 4 * t.qp(2) * t.psi(2) * t.psi(14) / d + t.phi_neg(1) * t.phi_neg(7) / d
    return lhs, 2 * first * second


# -- degree 23 ------------------------------------------------------------

def _w23(t: _Terms) -> ArbReal:
    mp = t.pair(1, 23)
    return root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 24)


@_identity("EQ13", (1, 23), "degree 23 modular equation")
def _eq13(t: _Terms) -> Sides:
    mp = t.pair(1, 23)
    return mp.x + mp.y + t.root(2, 2, 3) * _w23(t), t.c(1)


@_identity("EQ14", (1, 23), "degree 23 multiplier", limit=-22)
def _eq14(t: _Terms) -> Sides:
    mp, m = t.pair(1, 23), t.m(1, 23)
    w = _w23(t)
    bracket = (11 - 13 * t.root(4, 1, 3) * w + 18 * t.root(2, 1, 3) * w ** 2
               - 14 * w ** 3 + t.root(2, 5, 3) * w ** 4)
    return m - 23 / m, 2 * (mp.x - mp.y) * bracket


# -- degrees (1,15) and (3,5): algebraic relations -------------------------

@_identity("EQ15_15", (1, 15), "degree 15 modular equation, plus sign")
def _eq15_15(t: _Terms) -> Sides:
    mp = t.pair(1, 15)
    xy = root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 8)
    return mp.x + mp.y + xy, t.sqrt_s(1, 15)


@_identity("EQ15_35", (3, 5), "degree 5/3 modular equation, minus sign")
def _eq15_35(t: _Terms) -> Sides:
    mp = t.pair(3, 5)
    xy = root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 8)
    return mp.x + mp.y - xy, t.sqrt_s(3, 5)


@_identity("EQ17", (1, 15), "Russell form P(P^2 - Q) + R = 0")
def _eq17(t: _Terms) -> Sides:
    r = russell_triple(t.pair(1, 15))
    return r.P * (r.P ** 2 - r.Q) + r.R, t.c(0)


@_identity("EQ18", (3, 5), "Russell form P(P^2 + Q) + R = 0")
def _eq18(t: _Terms) -> Sides:
    r = russell_triple(t.pair(3, 5))
    return r.P * (r.P ** 2 + r.Q) + r.R, t.c(0)


# -- degree 15 multiplier -------------------------------------------------

@_identity("EQ19", (1, 15), "degree 15 multiplier, natural form", limit=-14)
def _eq19(t: _Terms) -> Sides:
    mp, m = t.pair(1, 15), t.m(1, 15)
    x, y = mp.x, mp.y
    x2 = root_pow(mp.alpha * mp.beta, 1, 4)
    y2 = root_pow(mp.alpha_c * mp.beta_c, 1, 4)
    xy = root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 8)
    bracket = 1 + 3 * (x + y) + 3 * (x2 + y2) + 2 * xy * (3 + x + y)
    return m - 15 / m, 2 * (x - y) * bracket


@_identity("EQ20", (1, 15), "degree 15 multiplier, emphatic form", limit=-14)
def _eq20(t: _Terms) -> Sides:
    mp, m = t.pair(1, 15), t.m(1, 15)
    x2 = root_pow(mp.alpha * mp.beta, 1, 4)
    y2 = root_pow(mp.alpha_c * mp.beta_c, 1, 4)
    return m - 15 / m, 2 * (x2 - y2) * (4 * t.sqrt_s(1, 15) + 4 - (x2 + y2))


@_identity("EQ21", (1, 15), "degree 15 multiplier, theta form", theta_only=True, limit=-14)
def _eq21(t: _Terms) -> Sides:
    d = t.phi(1) * t.phi(15)
    lhs = t.phi(1) ** 2 / t.phi(15) ** 2 - 15 * t.phi(15) ** 2 / t.phi(1) ** 2
    a = 4 * t.qp(4) * t.psi(2) * t.psi(30) / d
    b = t.phi_neg(1) * t.phi_neg(15) / d
    s = t.phi(2) * t.phi(30) / d + 4 * t.qp(8) * t.psi(4) * t.psi(60) / d
    return lhs, 2 * (a - b) * (4 * s + 4 - (a + b))


@_identity("EQ28", (1, 15), "degree 15 multiplier in x, y", limit=-14)
def _eq28(t: _Terms) -> Sides:
    mp, m = t.pair(1, 15), t.m(1, 15)
    x, y = mp.x, mp.y
    bracket = (1 + 3 * x + 3 * x ** 2 + 3 * y + 6 * x * y + 2 * x ** 2 * y
               + 3 * y ** 2 + 2 * x * y ** 2)
    return m - 15 / m, 2 * (x - y) * bracket


def closed_form_15(t_val: ArbReal) -> ArbReal:
    """-sqrt(1 + t - t^2)(1 + 5t + 5t^2 + 3t^3) / t^(7/2)."""
    poly = 1 + 5 * t_val + 5 * t_val ** 2 + 3 * t_val ** 3
    return -(1 + t_val - t_val ** 2).sqrt() * poly / root_pow(t_val, 7, 2)


@_identity("EQ33_T", (1, 15), "parameterized closed form at t = 1/(x + y)", limit=-14)
def _eq33(t: _Terms) -> Sides:
    mp, m = t.pair(1, 15), t.m(1, 15)
    return m - 15 / m, closed_form_15(1 / (mp.x + mp.y))


@_identity("EQ36", (1, 15), "degree 15 multiplier in x^2, y^2", limit=-14)
def _eq36(t: _Terms) -> Sides:
    mp, m = t.pair(1, 15), t.m(1, 15)
    x2, y2 = mp.x ** 2, mp.y ** 2
    return m - 15 / m, 2 * (x2 - y2) * (4 * t.sqrt_s(1, 15) + 4 - x2 - y2)


@_identity("EQ37", (1, 15), "square-root identity in alpha, beta")
def _eq37(t: _Terms) -> Sides:
    mp = t.pair(1, 15)
    ra, rb = mp.alpha_c.sqrt(), mp.beta_c.sqrt()
    two = t.c(2).sqrt()
    rhs = ((1 - ra).sqrt() / two * ((1 - rb).sqrt() / two)
           + (1 + ra).sqrt() / two * ((1 + rb).sqrt() / two))
    return t.sqrt_s(1, 15), rhs


@_identity("EQ38", (1, 15), "square-root identity, theta form", theta_only=True)
def _eq38(t: _Terms) -> Sides:
    d = t.phi(1) * t.phi(15)
    x2 = 4 * t.qp(4) * t.psi(2) * t.psi(30) / d
    y2 = t.phi_neg(1) * t.phi_neg(15) / d
    lhs = ((1 + x2 ** 2 + y2 ** 2) / 2).sqrt()
    rhs = t.phi(2) * t.phi(30) / d + 4 * t.qp(8) * t.psi(4) * t.psi(60) / d
    return lhs, rhs


def _eighth_root_moduli(t: _Terms, k: int):
    return t._memo(("eq9", k), lambda: (alpha_from_q_eighth(t.qp(k)), alpha_complement_from_q_eighth(t.qp(k))))


@_identity("EQ39A", (1, 15), "(alpha beta)^(1/4) in theta functions", theta_only=True)
def _eq39a(t: _Terms) -> Sides:
    # alpha, beta from the eighth-root quotients, checked against the fourth-root form
    a, _ = _eighth_root_moduli(t, 1)
    b, _ = _eighth_root_moduli(t, 15)
    rhs = 4 * t.qp(4) * t.psi(2) * t.psi(30) / (t.phi(1) * t.phi(15))
    return root_pow(a * b, 1, 4), rhs


@_identity("EQ39B", (1, 15), "((1-alpha)(1-beta))^(1/4) in theta functions", theta_only=True)
def _eq39b(t: _Terms) -> Sides:
    _, ac = _eighth_root_moduli(t, 1)
    _, bc = _eighth_root_moduli(t, 15)
    rhs = t.phi_neg(1) * t.phi_neg(15) / (t.phi(1) * t.phi(15))
    return root_pow(ac * bc, 1, 4), rhs


# -- degree 5/3 -------------------------------------------------------------

@_identity("EQ40", (3, 5), "degree 5/3 multiplier, natural form", limit=Fraction(-2, 3))
def _eq40(t: _Terms) -> Sides:
    mp, m = t.pair(3, 5), t.m(3, 5)
    x, y = mp.x, mp.y
    x2 = root_pow(mp.alpha * mp.beta, 1, 4)
    y2 = root_pow(mp.alpha_c * mp.beta_c, 1, 4)
    xy = root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 8)
    bracket = 1 - 3 * (x + y) + 3 * (x2 + y2) + 2 * xy * (3 - x - y)
    return m - Fraction(5, 3) / m, Fraction(2, 3) * (x - y) * bracket


@_identity("EQ41", (3, 5), "degree 5/3 multiplier, emphatic form", limit=Fraction(-2, 3))
def _eq41(t: _Terms) -> Sides:
    mp, m = t.pair(3, 5), t.m(3, 5)
    x2 = root_pow(mp.alpha * mp.beta, 1, 4)
    y2 = root_pow(mp.alpha_c * mp.beta_c, 1, 4)
    return (m - Fraction(5, 3) / m,
            Fraction(2, 3) * (x2 - y2) * (4 * t.sqrt_s(3, 5) - 4 + (x2 + y2)))


@_identity("EQ42", (3, 5), "degree 5/3 multiplier, theta form", theta_only=True, limit=Fraction(-2, 3))
def _eq42(t: _Terms) -> Sides:
    d = t.phi(3) * t.phi(5)
    lhs = t.phi(3) ** 2 / t.phi(5) ** 2 - Fraction(5, 3) * t.phi(5) ** 2 / t.phi(3) ** 2
    a = 4 * t.qp(2) * t.psi(6) * t.psi(10) / d
    b = t.phi_neg(3) * t.phi_neg(5) / d
    s = t.phi(6) * t.phi(10) / d + 4 * t.qp(4) * t.psi(12) * t.psi(20) / d
    return lhs, Fraction(2, 3) * (a - b) * (4 * s - 4 + (a + b))


# -- multiplier differential law by finite differences ---------------------

def eq22_sides(q, n: int, h, prec: Precision, orientation: str = "direct") -> Sides:
    """Both sides of n dalpha/dbeta = alpha(1-alpha)/(beta(1-beta)) m^2 for degree (1, n).

    Derivatives are central differences in q with step ``h``.  With
    ``orientation="inverted"`` the left side is n dbeta/dalpha instead.
    """
    if orientation not in ("direct", "inverted"):
        raise ValueError(f"unknown orientation {orientation!r}")
    qv = q_value(q, prec)
    hv = q_value(h, prec)
    if isinstance(q, ArbReal) or isinstance(h, ArbReal):
        lo, hi = qv - hv, qv + hv
    else:
        lo, hi = q_value(Fraction(q) - Fraction(h), prec), q_value(Fraction(q) + Fraction(h), prec)
    if lo.sign() <= 0 or hi >= 1:
        raise GridRangeError("q +/- h leaves (0, 1)")

    def moduli_at(qq):
        return alpha_from_q(qq), alpha_from_q(qq ** n)

    a_lo, b_lo = moduli_at(lo)
    a_hi, b_hi = moduli_at(hi)
    d_alpha, d_beta = a_hi - a_lo, b_hi - b_lo
    noise = 64 * b_hi.ulp()
    if abs(d_beta) <= noise or abs(d_alpha) <= 64 * a_hi.ulp():
        raise StepTooSmall(f"difference below noise floor at h={h}")
    mp = moduli_pair(q, 1, n, prec)
    m = (phi(q_power(q, 1, prec)) / phi(q_power(q, n, prec))) ** 2
    rhs = mp.alpha * mp.alpha_c / (mp.beta * mp.beta_c) * m ** 2
    lhs = n * d_alpha / d_beta if orientation == "direct" else n * d_beta / d_alpha
    return lhs, rhs


def verify_eq22_fd(q, n: int, h, prec: Precision, orientation: str = "direct") -> ArbReal:
    lhs, rhs = eq22_sides(q, n, h, prec, orientation)
    return abs(lhs - rhs)


def _fd_settings(prec: Precision):
    """Boosted precision and step making the O(h^2) error and rounding noise
    both fall below 10**-(D - 8) for q in the default grid."""
    d = prec.digits
    work = Precision.from_digits(2 * d + 20, prec.guard_bits)
    return work, Fraction(1, 10 ** (d // 2 + 20))


@_identity("EQ22_FD", (1, 15), "multiplier differential law, central differences")
def _eq22(t: _Terms) -> Sides:
    work, h = _fd_settings(t.prec)
    # kept at the boosted precision: rounding both sides back would hide the residual
    return eq22_sides(t.q, 15, h, work)


# -- public API -------------------------------------------------------------

def catalog() -> dict:
    return dict(_CATALOG)


def get_identity(ident) -> Identity:
    return _CATALOG[IdentityId(ident)]


def _check_grid_q(q) -> None:
    qf = q.to_fraction() if isinstance(q, ArbReal) else Fraction(q)
    if not (0 < qf <= MAX_Q):
        raise GridRangeError(f"q = {q} outside the validated range (0, 1/2]")


def sides(ident, q, prec: Precision) -> Sides:
    _check_grid_q(q)
    return get_identity(ident).sides(_Terms(q, prec))


def residual(ident, q, prec: Precision) -> ArbReal:
    lhs, rhs = sides(ident, q, prec)
    return lhs - rhs


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    q: object
    residual: ArbReal | None
    tolerance: ArbReal
    passed: bool
    precision_bits: int
    elapsed_ms: float = 0.0
    error: str | None = None

    def q_text(self) -> str:
        if isinstance(self.q, ArbReal):
            return self.q.to_string(20)
        return str(Fraction(self.q))

    def as_dict(self, full_residual: bool = False) -> dict:
        if self.residual is None:
            res = None
        elif full_residual:
            res = self.residual.to_string()
        else:
            res = self.residual.to_sci(6)
        out = {
            "id": str(self.id),
            "q": self.q_text(),
            "residual": res,
            "tolerance": self.tolerance.to_sci(6),
            "passed": self.passed,
            "precision_bits": self.precision_bits,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _tolerance(prec: Precision, tolerance_exponent: int | None) -> ArbReal:
    return prec.tolerance(tolerance_exponent)


def evaluate_point(ident, q, prec: Precision, tolerance_exponent: int | None = None) -> IdentityReport:
    """Residual at one q, with failures of any kind recorded in the report."""
    ident = IdentityId(ident)
    tol = _tolerance(prec, tolerance_exponent)
    start = time.perf_counter()
    try:
        res = residual(ident, q, prec)
    except (DomainError, StepTooSmall, ArithmeticError) as exc:
        return IdentityReport(ident, q, None, tol, False, prec.bits,
                              (time.perf_counter() - start) * 1e3, f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - start) * 1e3
    if tolerance_exponent is not None and tolerance_exponent >= prec.digits:
        # a residual that rounds to zero says nothing below the working resolution
        return IdentityReport(ident, q, res, tol, False, prec.bits, elapsed,
                              f"tolerance 1e-{tolerance_exponent} is finer than {prec.digits}-digit precision")
    return IdentityReport(ident, q, res, tol, abs(res) < tol, prec.bits, elapsed)


def verify_grid(ident, grid: Sequence, prec: Precision,
                tolerance_exponent: int | None = None) -> list:
    if not grid:
        raise ValueError("empty grid")
    return [evaluate_point(ident, q, prec, tolerance_exponent) for q in grid]


def limit_report(ident, prec: Precision) -> IdentityReport:
    """Both sides at q = 10^-6 against the identity's limiting value, tolerance 10^-4."""
    ident = IdentityId(ident)
    value = get_identity(ident).limit_value
    if value is None:
        raise ValueError(f"{ident} has no limit anchor")
    tol = ArbReal.from_rational(LIMIT_TOLERANCE, prec)
    start = time.perf_counter()
    lhs, rhs = sides(ident, LIMIT_Q, prec)
    dev = max(abs(lhs - value), abs(rhs - value))
    return IdentityReport(ident, LIMIT_Q, dev, tol, dev < tol, prec.bits,
                          (time.perf_counter() - start) * 1e3)


def limit_anchors() -> list:
    return [i for i, ident in _CATALOG.items() if ident.limit_value is not None]
