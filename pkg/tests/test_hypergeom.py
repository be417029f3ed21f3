from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from modeq.errors import DomainError
from modeq.hypergeom import (
    hyp2f1_half, hyp2f1_half_agm, hyp2f1_half_complement, nome, period_ratio,
)
from modeq.moduli import alpha_complement_from_q, alpha_from_q, q_power
from modeq.numerics import ArbReal, Precision, exp, pi
from modeq.qseries import phi


def R(value, prec):
    return ArbReal.from_rational(Fraction(value), prec)


def test_hyp2f1_at_zero_and_half(p100):
    assert hyp2f1_half(R(0, p100)).to_fraction() == 1
    value = hyp2f1_half(R("1/2", p100))
    assert value.to_string(14) == "1.1803405990161"
    assert oracles.close(value, oracles.hyp2f1_half_fixed(Fraction(1, 2)), 110)


def test_hyp2f1_equals_phi_squared(p100):
    q = R("1/20", p100)
    assert abs(hyp2f1_half(alpha_from_q(q)) - phi(q) ** 2) < p100.tolerance()


@pytest.mark.parametrize("x", ["1", "3/2", "-1/10"])
def test_hyp2f1_domain(p100, x):
    with pytest.raises(DomainError):
        hyp2f1_half(R(x, p100))


@given(st.fractions(min_value=0, max_value=Fraction(9, 10)))
def test_agm_route_matches_series(x):
    p = Precision.from_digits(60)
    xv = ArbReal.from_rational(x, p)
    assert abs(hyp2f1_half(xv) - hyp2f1_half_agm(xv)) < p.tolerance()


def test_complement_for_tiny_argument(p100):
    # 2F1(1 - x) for x ~ 1e-25: the AGM route never forms 1 - x
    x = R(Fraction(1, 10**25), p100)
    series_big_prec = Precision.from_digits(160)
    ref = hyp2f1_half_agm(1 - R(Fraction(1, 10**25), series_big_prec))
    assert abs(hyp2f1_half_complement(x).to_fraction() - ref.to_fraction()) < Fraction(1, 10**90)


def test_period_ratio_symmetry(p100):
    assert abs(period_ratio(R("1/2", p100)) - 1) < p100.tolerance()
    a = R("3/10", p100)
    assert abs(period_ratio(a) * period_ratio(1 - a) - 1) < p100.tolerance()


def test_period_ratio_at_self_dual_nome(p100):
    q = exp(-pi(p100))
    assert abs(period_ratio(alpha_from_q(q)) - 1) < p100.tolerance()


def test_nome_of_half(p100):
    value = nome(R("1/2", p100))
    assert value.to_string(12) == "0.0432139182638"
    assert oracles.close(value, oracles.exp_minus_pi(), 90)


@pytest.mark.parametrize("q", ["3/100", "1/50", "1/20", "1/10"])
def test_nome_roundtrip(p100, q):
    qv = R(q, p100)
    assert abs(nome(alpha_from_q(qv), alpha_complement_from_q(qv)) - qv) < p100.tolerance()


def test_nome_increasing(p100):
    values = [nome(R(a, p100)) for a in ("1/10", "3/10", "1/2", "7/10")]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("q", ["1/50", "1/20"])
def test_degree_fifteen_period_relation(p100, q):
    q1, q15 = q_power(Fraction(q), 1, p100), q_power(Fraction(q), 15, p100)
    lhs = 15 * period_ratio(alpha_from_q(q1), alpha_complement_from_q(q1))
    rhs = period_ratio(alpha_from_q(q15), alpha_complement_from_q(q15))
    assert abs(lhs - rhs) < p100.tolerance()


@pytest.mark.parametrize("n", [7, 15])
def test_multiplier_bridge(p100, n):
    q = Fraction(1, 20)
    q1, qn = q_power(q, 1, p100), q_power(q, n, p100)
    hyp = hyp2f1_half(alpha_from_q(q1)) / hyp2f1_half(alpha_from_q(qn))
    theta = phi(q1) ** 2 / phi(qn) ** 2
    assert abs(hyp - theta) < p100.tolerance()
