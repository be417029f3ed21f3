from fractions import Fraction

import pytest

import oracles
from modeq.errors import DomainError, SignUndefined
from modeq.identities import DEFAULT_GRID
from modeq.moduli import (
    alpha_complement_from_q, alpha_complement_from_q_eighth, alpha_from_q,
    alpha_from_q_eighth, moduli_pair, multiplier, q_power, russell_sign, russell_triple,
)
from modeq.numerics import ArbReal, exp, pi, root_pow


def R(value, prec):
    return ArbReal.from_rational(Fraction(value), prec)


def test_alpha_small_q_limit(p100):
    q = R(Fraction(1, 10**6), p100)
    assert abs(alpha_from_q(q) / (16 * q) - 1) < R(Fraction(1, 10**5), p100)


def test_alpha_at_one_tenth(p100):
    q = Fraction(1, 10)
    ref = 16 * q * oracles.psi_exact(q * q) ** 4 / oracles.phi_exact(q) ** 4
    value = alpha_from_q(R(q, p100))
    assert value.to_string(4) == "0.8024"
    assert oracles.close(value, ref, 110)


def test_alpha_at_self_dual_nome(p100):
    assert abs(alpha_from_q(exp(-pi(p100))) - R("1/2", p100)) < p100.tolerance()


@pytest.mark.parametrize("q", DEFAULT_GRID)
def test_complement_and_eighth_root_forms(p100, q):
    qv = R(q, p100)
    a = alpha_from_q(qv)
    assert abs(a + alpha_complement_from_q(qv) - 1) < p100.tolerance()
    assert abs(alpha_from_q_eighth(qv) - a) < p100.tolerance()
    assert abs(alpha_complement_from_q_eighth(qv) - alpha_complement_from_q(qv)) < p100.tolerance()


@pytest.mark.parametrize("q", ["0", "1", "-1/10"])
def test_alpha_domain(p100, q):
    with pytest.raises(DomainError):
        alpha_from_q(R(q, p100))


def test_pair_uses_degree_powers(p100):
    q = Fraction(1, 10)
    mp = moduli_pair(q, 1, 15, p100)
    assert mp.alpha == alpha_from_q(R(q, p100))
    assert mp.beta == alpha_from_q(R(q**15, p100))
    assert mp.degree == 15


def test_pair_three_five_ordering(p100):
    mp = moduli_pair(Fraction(1, 5), 3, 5, p100)
    assert 0 < mp.beta < mp.alpha < 1
    assert mp.x < mp.y


def test_pair_small_q_limit(p100):
    mp = moduli_pair(Fraction(1, 10**6), 1, 15, p100)
    assert mp.x < R(Fraction(1, 10**5), p100)
    assert abs(mp.y - 1) < R(Fraction(1, 10**5), p100)


@pytest.mark.parametrize("pair", [(1, 7), (1, 15), (1, 23), (3, 5)])
def test_pair_invariants_on_grid(p100, pair):
    for q in DEFAULT_GRID:
        mp = moduli_pair(q, *pair, p100)
        assert 0 < mp.x < mp.y < 1
        assert abs(mp.x ** 8 - mp.alpha * mp.beta) < p100.tolerance()
        assert abs(mp.y ** 8 - mp.alpha_c * mp.beta_c) < p100.tolerance()


def test_degree_composition(p100):
    q = Fraction(3, 20)
    direct = alpha_from_q(q_power(q, 15, p100))
    composed = alpha_from_q(q_power(q**3, 5, p100))
    assert direct == composed


@pytest.mark.parametrize("pair", [(2, 4), (5, 3), (0, 7)])
def test_pair_degree_checks(p100, pair):
    with pytest.raises(DomainError):
        moduli_pair(Fraction(1, 10), *pair, p100)


def test_multiplier_limits(p100):
    q = Fraction(1, 10**6)
    tol = R(Fraction(1, 10**4), p100)
    m = multiplier(q, 1, 15, p100).m
    assert abs(m - 15 / m + 14) < tol
    m = multiplier(q, 3, 5, p100).m
    assert abs(m - Fraction(5, 3) / m + Fraction(2, 3)) < tol


def test_multiplier_against_hypergeometric(p100):
    s = multiplier(Fraction(1, 20), 1, 7, p100, cross_check=True)
    assert abs(s.m - s.z1_hyp / s.zn_hyp) < p100.tolerance()
    assert s.degree == 7
    assert multiplier(Fraction(3, 10), 1, 7, p100, cross_check=True).z1_hyp is None


def test_multiplier_exceeds_one(p100):
    for q in DEFAULT_GRID:
        assert multiplier(q, 1, 15, p100).m > 1
        assert multiplier(q, 3, 5, p100).m > 1


def test_russell_signs():
    assert russell_sign(1, 15) == 1
    assert russell_sign(3, 5) == -1
    with pytest.raises(SignUndefined):
        russell_sign(1, 5)


def test_russell_small_q_limits(p100):
    tol = R(Fraction(1, 10**4), p100)
    r = russell_triple(moduli_pair(Fraction(1, 10**6), 1, 15, p100))
    assert abs(r.P - 2) < tol and abs(r.Q - 4) < tol and abs(r.R) < tol
    assert abs(r.P * (r.P ** 2 - r.Q) + r.R) < tol
    r = russell_triple(moduli_pair(Fraction(1, 10**6), 3, 5, p100))
    assert abs(r.P) < tol
    assert abs(r.P * (r.P ** 2 + r.Q) + r.R) < tol


def test_russell_relation_at_one_tenth(p100):
    mp = moduli_pair(Fraction(1, 10), 1, 15, p100)
    r = russell_triple(mp)
    assert abs(r.P * (r.P ** 2 - r.Q) + r.R) < p100.tolerance()
    assert abs(r.R - 4 * root_pow(mp.alpha * mp.beta * mp.alpha_c * mp.beta_c, 1, 8)) < p100.tolerance()
    with pytest.raises(SignUndefined):
        russell_triple(moduli_pair(Fraction(1, 10), 2, 5, p100))
    # 8 | 1 + 7, yet the pair is outside the supported set
    assert russell_sign(1, 7) == -1
    with pytest.raises(SignUndefined):
        russell_triple(moduli_pair(Fraction(1, 10), 1, 7, p100))
