"""PuiseuxScalar: exact rational functions in u = pi^(1/N)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from p1reduce import QQ, GroundField, PuiseuxScalar
from p1reduce.errors import NonIntegralError

from conftest import F5, const, pi


def scalar_strategy(field=QQ, N=1):
    coeff = st.integers(min_value=-6, max_value=6)
    poly = st.lists(coeff, min_size=0, max_size=4)
    return st.builds(
        lambda num, den: PuiseuxScalar(field, N, [field.coerce(c) for c in num],
                                       [field.coerce(c) for c in den]),
        poly,
        poly.filter(any),
    )


scalars = scalar_strategy()


@settings(max_examples=60)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(scalars, scalars.filter(lambda s: not s.is_zero()))
def test_field_axioms(a, b):
    assert (a / b) * b == a
    assert b * b.inverse() == const(1)


@given(scalars)
def test_reduction_is_canonical(a):
    # monic denominator, coprime to numerator
    assert a.den[-1] == QQ.one
    if a.num and (len(a.num) > 1 or len(a.den) > 1):
        from p1reduce._kernels import poly_gcd

        g = poly_gcd(list(a.num), list(a.den))
        assert len(g) == 1


def test_val_pi_exact_fraction():
    s = pi(Fraction(3, 2), N=2)
    assert s.val_pi() == Fraction(3, 2)
    assert const(0).val_pi() is None
    assert (pi(1) + pi(2)).val_pi() == 1
    assert pi(-2).val_pi() == -2


def test_pi_power_needs_compatible_denominator():
    with pytest.raises(ValueError):
        PuiseuxScalar.pi_power(QQ, Fraction(1, 2), 1)


def test_specialize_at_pi_zero():
    assert (const(3) + pi(1)).specialize0() == Fraction(3)
    assert pi(2).specialize0() == Fraction(0)
    with pytest.raises(NonIntegralError):
        pi(-1).specialize0()


def test_evaluate_matches_substitution():
    # (2 + u) / (1 + u^2) at u = 3
    s = (const(2) + pi(1)) / (const(1) + pi(2))
    assert s.evaluate(3) == Fraction(5, 10)
    with pytest.raises(ZeroDivisionError):
        ((const(1)) / (const(1) + pi(1))).evaluate(-1)


def test_extend_commutes_with_arithmetic():
    a = const(2) + pi(1)
    b = const(1) - pi(1)
    assert (a * b).extend(3) == a.extend(3) * b.extend(3)
    assert (a + b).extend(3) == a.extend(3) + b.extend(3)
    assert a.extend(3).val_pi() == a.val_pi()


def test_prime_field_scalars():
    a = PuiseuxScalar.constant(F5, 3) + PuiseuxScalar.pi_power(F5, 1, 1)
    b = PuiseuxScalar.constant(F5, 2)
    assert (a / b) * b == a
    assert a.specialize0() == F5.coerce(3)


def test_mixed_root_alignment():
    a = pi(1, N=1)
    b = pi(Fraction(1, 2), N=2)
    assert (a * b).val_pi() == Fraction(3, 2)
    assert (a + b).N == 2


def test_bad_field():
    with pytest.raises(ValueError):
        GroundField("prime", 6)
    with pytest.raises(ValueError):
        GroundField("reals")
