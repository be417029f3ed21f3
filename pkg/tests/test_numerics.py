from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from modeq.errors import DivisionByZero, DomainError, PrecisionMismatch
from modeq.numerics import ArbReal, Precision, const, exp, log, pi, root_pow, sqrt


def test_precision_contract():
    p = Precision.from_digits(100)
    assert p.digits == 100
    assert p.working_bits == p.bits + 64
    assert p.tolerance().to_fraction() == pytest.approx(Fraction(1, 10**90), rel=1e-30)
    with pytest.raises(ValueError):
        Precision(32)


def test_additive_identity_and_small_integers(p100):
    x = ArbReal.from_rational(Fraction(7, 13), p100)
    assert (x + 0) == x
    assert (const(2, p100) * 3).to_fraction() == 6


def test_third_times_three_within_two_ulp():
    p = Precision(256)
    third = ArbReal.from_rational(Fraction(1, 3), p)
    assert abs(third * 3 - 1) <= 2 * ArbReal.from_int(1, p).ulp()


def test_division_by_zero(p100):
    with pytest.raises(DivisionByZero):
        const(1, p100) / 0


def test_mixed_precisions_rejected(p100, p60):
    with pytest.raises(PrecisionMismatch):
        const(1, p100) + const(1, p60)


def test_floats_rejected(p100):
    with pytest.raises(TypeError):
        const(1, p100) + 0.5


def test_parse_exact_rational(p100):
    assert ArbReal.from_str("1/10", p100).to_fraction() == ArbReal.from_rational(Fraction(1, 10), p100).to_fraction()
    with pytest.raises(DomainError):
        ArbReal.from_str("one tenth", p100)


def test_root_pow_examples(p100):
    assert root_pow(const(4, p100), 1, 2).to_fraction() == 2
    assert oracles.close(root_pow(const(2, p100), 5, 3), oracles.nth_root_fixed(Fraction(32), 3), 110)
    assert root_pow(const(-8, p100), 1, 3).to_fraction() == -2


def test_root_pow_negative_even_root(p100):
    with pytest.raises(DomainError):
        root_pow(const(-2, p100), 1, 4)


@given(st.fractions(min_value=Fraction(1, 1000), max_value=10), st.sampled_from([2, 3, 4, 8]))
def test_root_roundtrip(a, r):
    p = Precision(256)
    av = ArbReal.from_rational(a, p)
    back = root_pow(av, 1, r) ** r
    assert abs(back - av) <= 2 * r * av.ulp()


@given(st.fractions(min_value=Fraction(1, 1000), max_value=10))
def test_root_of_power_roundtrip(a):
    p = Precision(256)
    av = ArbReal.from_rational(a, p)
    assert abs(root_pow(av, 8, 8) - av) <= 4 * av.ulp()


@given(st.fractions(min_value=Fraction(-50), max_value=Fraction(50)).filter(lambda v: v != 0))
def test_log_exp_within_four_ulp(x):
    # near x = 0 the rounding of exp(x) ~ 1 is an absolute error, so the ulp is taken at max(|x|, 1)
    p = Precision(256)
    xv = ArbReal.from_rational(x, p)
    unit = max(abs(xv), const(1, p)).ulp()
    assert abs(log(exp(xv)) - xv) <= 4 * unit


def test_elementary_examples(p100):
    assert sqrt(const(4, p100)).to_fraction() == 2
    assert exp(const(0, p100)).to_fraction() == 1
    with pytest.raises(DomainError):
        log(const(0, p100))
    with pytest.raises(DomainError):
        sqrt(const(-1, p100))


def test_pi_against_machin(p100):
    assert oracles.close(pi(p100), Fraction(oracles.pi_fixed(), oracles.SCALE), 110)


def test_exp_minus_pi(p100):
    value = exp(-pi(p100))
    assert value.to_string(20).startswith("0.0432139182637722497")
    assert oracles.close(value, oracles.exp_minus_pi(), 110)


def test_digits_stable_from_128_to_256_bits():
    lo, hi = Precision(128), Precision(256)
    for make in (lambda p: exp(-pi(p)), lambda p: root_pow(const(2, p), 5, 3),
                 lambda p: log(ArbReal.from_rational(Fraction(22, 7), p))):
        a, b = make(lo), make(hi)
        assert abs(a.to_fraction() - b.to_fraction()) < Fraction(1, 2**128)
        shared = lo.digits - 2
        assert a.to_string(shared) == b.to_string(shared)


def test_is_zero_within_and_formatting(p100):
    tiny = ArbReal.from_rational(Fraction(1, 10**95), p100)
    assert tiny.is_zero_within(p100.tolerance())
    assert not const(1, p100).is_zero_within(p100.tolerance())
    assert tiny.to_sci(3) == "1.00e-95"
    assert (-const(14, p100)).to_sci(6) == "-1.40000e+01"
