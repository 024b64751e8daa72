import math
import random
from fractions import Fraction

import pytest

from slicereg.errors import NotAUnit, RealBasePoint, RealPointNotExtendable
from slicereg.quaternion import I, J, K, ONE, Quaternion
from slicereg.slicefn import (char_poly, constant, dcds, dsdc, from_polynomial,
                              idempotent, iterate_op, j_function, slice_power,
                              slice_product, variable)
from slicereg.suites import (product_iteration_rhs, rand_base_point,
                             rand_quaternion, rand_regular_poly,
                             suite_basicslice, suite_leibniz, suite_main)

X = variable()


def horner_free_eval(coeffs, x):
    total = Quaternion.of(0)
    power = ONE
    for a in coeffs:
        total = total + power * a
        power = power * x
    return total


def test_evaluate_trivial_points():
    cube = slice_power(X, 3)
    assert cube.evaluate(I) == -I
    assert idempotent(J, "+").evaluate(I) == (ONE - K) * Fraction(1, 2)


def test_paper_polynomial_zero_at_i():
    p = from_polynomial([ONE, I - J + K, -(I + J + K), ONE])
    assert p.evaluate(I) == Quaternion.of(0)


def test_evaluate_matches_power_sum_oracle():
    rng = random.Random(7)
    for _ in range(20):
        coeffs = [rand_quaternion(rng) for _ in range(5)]
        f = from_polynomial(coeffs)
        x = rand_base_point(rng)
        assert f.evaluate(x) == horner_free_eval(coeffs, x)


def test_evaluate_exact_with_irrational_beta():
    # x = i + j has beta = sqrt(2); parity split keeps rational exactness
    f = slice_power(X, 2)
    x = I + J
    assert f.evaluate(x) == x * x
    assert f.evaluate(x).is_exact


def test_char_poly_vanishes_on_sphere():
    d = char_poly(I)
    assert d.evaluate(J) == Quaternion.of(0)
    assert d.evaluate(K) == Quaternion.of(0)
    u = (I + J).to_float() * (1 / math.sqrt(2))
    assert d.evaluate(u).abs_float() < 1e-12
    with pytest.raises(RealBasePoint):
        char_poly(Quaternion.of(3))


def test_real_point_evaluation():
    f = slice_power(X, 2)
    assert f.evaluate(Quaternion.of(Fraction(3, 2))) == Quaternion.of(Fraction(9, 4))
    with pytest.raises(RealPointNotExtendable):
        j_function().evaluate(Quaternion.of(1))


def test_spherical_operators_pointwise_laws():
    rng = random.Random(11)
    for _ in range(10):
        f = rand_regular_poly(rng, max_degree=5)
        x = rand_base_point(rng)
        xc = x.conj()
        vs = f.spherical_value().evaluate(x)
        assert vs * 2 == f.evaluate(x) + f.evaluate(xc)
        ds = f.spherical_derivative().evaluate(x)
        assert x.im() * ds * 2 == f.evaluate(x) - f.evaluate(xc)


def test_spherical_derivative_of_square():
    # ds x^2 = 2*alpha, a slice-preserving function of alpha only
    ds = slice_power(X, 2).spherical_derivative()
    assert ds.evaluate(Quaternion.of(3, 1)) == Quaternion.of(6)


def test_slice_derivative_of_monomials():
    for n in range(1, 7):
        d = slice_power(X, n).slice_derivative()
        assert d == slice_power(X, n - 1).scale(n)


def test_regularity():
    rng = random.Random(3)
    assert rand_regular_poly(rng, max_degree=6).is_regular()
    assert constant(I).is_regular()
    # the quaternionic conjugate of the variable (stem (alpha, -beta)) is not
    from slicereg.slicefn import SliceFunction
    from slicereg.stem import LaurentStem
    conj_var = SliceFunction(LaurentStem.monomial(1, 0, ONE),
                             LaurentStem.monomial(0, 1, -ONE))
    assert not conj_var.is_regular()


def test_regularity_closed_under_product():
    rng = random.Random(5)
    for _ in range(10):
        f = rand_regular_poly(rng, max_degree=4)
        g = rand_regular_poly(rng, max_degree=4)
        assert slice_product(f, g).is_regular()


def test_slice_product_representation_formula():
    # f(x^c) = F0 - I F1 at exact points
    rng = random.Random(9)
    for _ in range(10):
        f = rand_regular_poly(rng, max_degree=5)
        x = rand_base_point(rng)
        c = x.decompose()
        b2 = x.im().norm_sq()
        rhs = (f.f0.evaluate_split(c.alpha, b2, x.im())
               - f.f1.evaluate_split(c.alpha, b2, x.im()))
        assert f.evaluate(x.conj()) == rhs


def test_idempotents():
    for u in (I, J, K):
        for sign in "+-":
            e = idempotent(u, sign)
            assert slice_product(e, e) == e
        assert idempotent(u, "+") + idempotent(u, "-") == constant(1)
    with pytest.raises(NotAUnit):
        idempotent(Quaternion.of(0, 1, 1), "+")
    with pytest.raises(NotAUnit):
        idempotent(Quaternion.of(1), "+")
    # float unit within tolerance is accepted
    uf = (I + J).to_float() * (1 / math.sqrt(2))
    e = idempotent(uf, "+")
    assert slice_product(e, e).approx_eq(e)


def test_slice_preserving_predicates():
    assert char_poly(I).is_slice_preserving()
    assert not from_polynomial([I, ONE]).is_slice_preserving()
    f = from_polynomial([I, ONE, I])
    assert f.is_one_slice_preserving(I)
    assert not f.is_one_slice_preserving(J)


def test_product_iteration_closed_form():
    rng = random.Random(13)
    f = rand_regular_poly(rng, max_degree=4)
    g = rand_regular_poly(rng, max_degree=4)
    prod = slice_product(f, g)
    for k in (1, 2, 3, 4):
        assert iterate_op(prod, dcds, k) == product_iteration_rhs(f, g, k)


def test_power_degree_annihilation():
    # alternating derivative strings kill x^n after n steps
    for n in (1, 2, 3):
        even = slice_power(X, 2 * n)
        assert iterate_op(even, dcds, n).spherical_derivative().is_zero
        assert iterate_op(even, dsdc, n).slice_derivative().is_zero
        odd = slice_power(X, 2 * n + 1)
        assert iterate_op(odd, dcds, n + 1).is_zero
        assert iterate_op(odd, dsdc, n + 1).is_zero


def test_builtin_suites_pass():
    assert all(r.passed for r in suite_basicslice(seed=2))
    assert all(r.passed for r in suite_leibniz(seed=2))
    assert all(r.passed for r in suite_main(seed=2))
