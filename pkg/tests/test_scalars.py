from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st

from qgwa import poly as P
from qgwa.scalars import (ParamConfig, ParamScalar, ParamZeroDivisionError, SpecializationError,
                          canonicalize, field_arith, solve_power_identity, specialize)

from conftest import nonzero_polys, polys, scalars, to_sympy

p, q, l, u = (ParamScalar.symbol(n) for n in "pqlu")


# -- polynomial gcd against sympy ------------------------------------------------

@given(polys, polys, nonzero_polys)
def test_gcd_matches_sympy(a, b, c):
    """gcd(ac, bc) agrees with sympy up to sign"""
    a, b = P.pmul(a, c), P.pmul(b, c)
    g = P.pgcd(a, b)
    want = sympy.gcd(to_sympy(a), to_sympy(b))
    got = to_sympy(g)
    assert sympy.expand(got - want) == 0 or sympy.expand(got + want) == 0


@given(nonzero_polys, nonzero_polys)
def test_exact_division(a, b):
    ab = P.pmul(a, b)
    assert P.pdivexact(ab, b) == a
    assert P.pdivexact(ab, a) == b


def test_inexact_division_returns_none():
    one_plus_p = {(0, 0, 0, 0): 1, (1, 0, 0, 0): 1}
    assert P.pdivexact({(2, 0, 0, 0): 1}, one_plus_p) is None


def test_term_order_is_graded():
    """p^2 + q*u + 1: degree first, then u > l > q > p"""
    a = {(2, 0, 0, 0): 1, (0, 1, 0, 1): 1, (0, 0, 0, 0): 1}
    assert P.format_poly(a) == "q*u + p^2 + 1"


# -- field arithmetic --------------------------------------------------------------

def test_field_arith_examples():
    assert field_arith(p - 1, ParamScalar(1), "add") == p
    assert field_arith(p ** 2 - 1, p - 1, "div") == p + 1
    assert field_arith(p / (p - 1), (p - 1) / p, "mul") == 1
    with pytest.raises(ZeroDivisionError):
        field_arith(p, ParamScalar(0), "div")
    with pytest.raises(ParamZeroDivisionError):
        p / (q - q)


def test_canonical_examples():
    """content, gcd and zero normalization"""
    assert canonicalize(ParamScalar(2 * p - 2, 2)).to_text() == "(p - 1)/(1)"
    assert canonicalize((p ** 2 - 1) / (p ** 2 - p)).to_text() == "(p + 1)/(p)"
    assert canonicalize(ParamScalar(0) / (p - 1)).to_text() == "(0)/(1)"


def test_denominator_sign_normalized():
    x = ParamScalar(1) / (1 - p)
    assert x.to_text() == "(-1)/(p - 1)"


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a:
        assert a * (1 / a) == 1


@given(scalars())
def test_canonicalize_idempotent(a):
    c = canonicalize(a)
    assert canonicalize(c).to_text() == c.to_text()
    # cross-multiplication equality is preserved
    assert P.pmul(a._num, c._den) == P.pmul(c._num, a._den)


@given(scalars(), scalars())
def test_equality_is_canonical_identity(a, b):
    assert (a == b) == (a.to_text() == b.to_text())


def test_parse_and_text_roundtrip():
    x = ParamScalar.parse("(p^2 - 1)/(p*q) + 2/l")
    assert ParamScalar.parse(x.to_text()) == x
    assert x == (p ** 2 - 1) / (p * q) + 2 / l


# -- specialization ----------------------------------------------------------------

def test_specialize_examples():
    cfg = ParamConfig.specialized(-1, 2, 3, 5)
    assert specialize((p ** 2 - 1) / (p - 1), cfg) == 0
    assert specialize(q ** 3, ParamConfig.specialized(2, -1, 1, 1)) == -1


def test_specialize_vanishing_denominator():
    with pytest.raises(SpecializationError) as info:
        specialize(1 / (p - 1), ParamConfig.specialized(1, 2, 3, 5))
    assert "denominator vanishes" in str(info.value)


def test_specialize_needs_full_assignment():
    with pytest.raises(ValueError):
        specialize(p, ParamConfig({"p": 2}))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(
    lambda f: f not in (0, 1, -1))


@given(scalars(), scalars(), st.tuples(rationals, rationals, rationals, rationals))
def test_specialize_is_multiplicative(a, b, vals):
    cfg = ParamConfig.specialized(*vals)
    try:
        sa, sb, sab = specialize(a, cfg), specialize(b, cfg), specialize(a * b, cfg)
    except SpecializationError:
        return
    assert sab == sa * sb


def test_config_flags():
    cfg = ParamConfig.parse("p=-1,q=2,l=1,u=1")
    assert cfg.mode == "specialized"
    assert cfg.p_is_minus_one and cfg.p_root_of_unity
    assert not cfg.q_root_of_unity and not cfg.q_is_one
    assert ParamConfig.parse("generic").mode == "generic"
    assert ParamConfig({"l": 1, "u": 1}).mode == "generic"
    with pytest.raises(ValueError):
        ParamConfig.parse("p=0")


# -- p^m q^r = 1 -------------------------------------------------------------------

def brute_power(pv, qv, lo, hi):
    pv, qv = Fraction(pv), Fraction(qv)
    return {(m, r) for m, r in product(range(lo, hi + 1), repeat=2) if pv ** m * qv ** r == 1}


def test_power_identity_examples():
    gen = ParamConfig.generic()
    assert solve_power_identity((-5, 5), (-5, 5), gen) == {(0, 0)}
    cfg = ParamConfig.specialized(2, 4, 1, 1)
    assert solve_power_identity((-4, 4), (-4, 4), cfg) == {
        (0, 0), (2, -1), (-2, 1), (4, -2), (-4, 2)}
    cfg = ParamConfig.specialized(2, 3, 1, 1)
    assert solve_power_identity((-4, 4), (-4, 4), cfg) == {(0, 0)}


@pytest.mark.parametrize("pv,qv", [(2, 4), (2, 3), (-1, 5), (-1, -1), (Fraction(1, 4), 2),
                                   (Fraction(4, 9), Fraction(-3, 2)), (1, 7), (-8, 4), (6, 6)])
def test_power_identity_matches_brute_force(pv, qv):
    cfg = ParamConfig.specialized(pv, qv, 1, 1)
    assert solve_power_identity((-6, 6), (-6, 6), cfg) == brute_power(pv, qv, -6, 6)


def test_power_identity_empty_range():
    with pytest.raises(ValueError):
        solve_power_identity((1, 0), (0, 0), ParamConfig.generic())
