import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slicereg.quaternion import I, J, K, ONE, Quaternion, scalar

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
quats = st.builds(Quaternion.of, rationals, rationals, rationals, rationals)


def test_hamilton_table():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert I * I == -ONE
    assert J * J == -ONE
    assert K * K == -ONE


def test_parse_round_trip():
    for text in ("1", "i", "-j", "1/2 + 1/2i", "1 + 2*i - 3*j + 4*k",
                 "0.5 + 0.5i", "-1/3k"):
        q = Quaternion.parse(text)
        assert Quaternion.parse(str(q)) == q


def test_parse_values():
    assert Quaternion.parse("1/2+1/2i") == Quaternion.of(Fraction(1, 2), Fraction(1, 2))
    assert Quaternion.parse("i") == I
    assert Quaternion.parse("-2k") == Quaternion.of(0, 0, 0, -2)
    assert Quaternion.parse("1+2i").is_exact
    assert not Quaternion.parse("1.5+2i").is_exact


def test_scalar_coercion():
    assert scalar("3/4") == Fraction(3, 4)
    assert isinstance(scalar("0.25"), float)
    assert scalar(2) == Fraction(2)


@given(quats, quats)
def test_norm_multiplicative(a, b):
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()


@given(quats)
def test_conj_involution_and_inverse(q):
    assert q.conj().conj() == q
    if not q.is_zero:
        assert q * q.inverse() == ONE
        assert q.inverse() * q == ONE


@given(quats, quats, quats)
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(quats)
def test_decompose_reconstruct(q):
    c = q.decompose()
    if c.unit is None:
        assert q.is_real
    else:
        assert c.beta > 0
        if c.beta_exact:
            assert c.reconstruct() == q
            assert c.unit * c.unit == -ONE
        else:
            assert c.reconstruct().approx_eq(q.to_float(), 1e-9)


def test_decompose_irrational_beta_goes_float():
    q = Quaternion.of(0, 1, 1)  # |Im| = sqrt(2)
    c = q.decompose()
    assert not c.beta_exact
    assert math.isclose(c.beta, math.sqrt(2))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Quaternion.of(0).inverse()


def test_json_round_trip():
    q = Quaternion.of(Fraction(1, 3), -2, Fraction(5, 7), 0)
    assert Quaternion.from_json(q.to_json()) == q
    qf = q.to_float()
    assert Quaternion.from_json(qf.to_json()) == qf
