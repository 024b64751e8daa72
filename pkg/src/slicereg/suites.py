"""Named verification suites behind `verify --suite ...`, plus the seeded
random generators they (and the tests) share.

Each suite returns a list of CheckResult; a suite passes iff every check does.
All randomness flows through one random.Random seeded by the caller, so runs
are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .expansion import (SphericalExpansion, delta_basis_term,
                        derivative_coefficients, evaluate_expansion, frak_poly,
                        spherical_coefficients, verify_diff_equation)
from .quaternion import Quaternion
from .slicefn import (SliceFunction, char_poly, constant, dcds, dsdc,
                      from_polynomial, idempotent, iterate_op, slice_product,
                      variable)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"[{mark}] {self.name}{extra}"


# -- random generators ---------------------------------------------------------

# imaginary parts (x, y, z, denominator) with x^2+y^2+z^2 = denominator^2,
# so unit/|unit| has rational components and exact beta
_UNIT_POOL = [
    (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1),
    (1, 2, 2, 3), (2, 3, 6, 7), (1, 4, 8, 9), (4, 4, 7, 9), (2, 6, 9, 11),
]


def rand_fraction(rng: random.Random, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion.of(*(rand_fraction(rng) for _ in range(4)))


def rand_unit(rng: random.Random) -> Quaternion:
    """A random imaginary unit with rational components (so exact beta)."""
    x, y, z, d = rng.choice(_UNIT_POOL)
    parts = [Fraction(x, d), Fraction(y, d), Fraction(z, d)]
    rng.shuffle(parts)
    signs = [rng.choice((-1, 1)) for _ in range(3)]
    return Quaternion.of(0, *(s * p for s, p in zip(signs, parts)))


def rand_base_point(rng: random.Random) -> Quaternion:
    """Random non-real quaternion with rational components and rational beta."""
    alpha = rand_fraction(rng, num=4, den=3)
    beta = abs(rand_fraction(rng, num=4, den=3)) + Fraction(1, 2)
    return Quaternion.real(alpha) + rand_unit(rng) * beta


def rand_regular_poly(rng: random.Random, max_degree: int = 6,
                      min_degree: int = 1) -> SliceFunction:
    deg = rng.randint(min_degree, max_degree)
    coeffs = [rand_quaternion(rng) for _ in range(deg + 1)]
    if coeffs[-1].is_zero:
        coeffs[-1] = Quaternion.of(1)
    return from_polynomial(coeffs)


def nonvanishing_on_sphere(g: SliceFunction, q0: Quaternion) -> bool:
    """True iff g has no zero on the sphere of q0, tested via the normal
    function N(g) = g * conj(g), which vanishes at q0 iff g vanishes
    somewhere on that sphere."""
    n = slice_product(g, g.slice_conjugate())
    return not n.evaluate(q0).is_zero


def rand_poly_nonvanishing(rng: random.Random, q0: Quaternion,
                           max_degree: int = 4) -> SliceFunction:
    while True:
        g = rand_regular_poly(rng, max_degree)
        if nonvanishing_on_sphere(g, q0):
            return g


# -- operator strings ----------------------------------------------------------


def ds_dcds_pow(f: SliceFunction, n: int) -> SliceFunction:
    """ds (dc ds)^n f."""
    return iterate_op(f, dcds, n).spherical_derivative()


def dc_dsdc_pow(f: SliceFunction, n: int) -> SliceFunction:
    """dc (ds dc)^n f."""
    return iterate_op(f, dsdc, n).slice_derivative()


def product_iteration_rhs(f: SliceFunction, g: SliceFunction,
                          k: int) -> SliceFunction:
    """The closed form of (dc ds)^k (f*g) for regular f, g:
    (dc ds)^k f * vs g + vs f * (dc ds)^k g
    + 1/2 [ sum_{h=0}^{k-1} C(k-1,h) (ds(dcds)^{k-h-1} f * dc(dsdc)^h g
                                      + dc(dsdc)^h f * ds(dcds)^{k-h-1} g)
          + sum_{h=1}^{k-1} C(k-1,h) ((dcds)^{k-h} f * (dsdc)^h g
                                      + (dsdc)^h f * (dcds)^{k-h} g) ]."""
    total = (slice_product(iterate_op(f, dcds, k), g.spherical_value())
             + slice_product(f.spherical_value(), iterate_op(g, dcds, k)))
    mid = constant(0)
    for h in range(k):
        c = math.comb(k - 1, h)
        mid = mid + (slice_product(ds_dcds_pow(f, k - h - 1), dc_dsdc_pow(g, h))
                     + slice_product(dc_dsdc_pow(f, h),
                                     ds_dcds_pow(g, k - h - 1))).scale(c)
    for h in range(1, k):
        c = math.comb(k - 1, h)
        mid = mid + (slice_product(iterate_op(f, dcds, k - h),
                                   iterate_op(g, dsdc, h))
                     + slice_product(iterate_op(f, dsdc, h),
                                     iterate_op(g, dcds, k - h))).scale(c)
    return total + mid.scale(Fraction(1, 2))


# -- suites --------------------------------------------------------------------


def suite_basicslice(seed: int = 0, kmax: int = 4,
                     trials: int = 10) -> List[CheckResult]:
    """ds^2 f = 0, ds vs f = 0, vs ds f = ds f, vs^2 f = vs f, plus the
    pointwise representation f(x^c) = F0 - I F1."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for t in range(trials):
        f = rand_regular_poly(rng, max_degree=kmax + 2)
        ds = f.spherical_derivative()
        vs = f.spherical_value()
        out.append(CheckResult(f"ds^2 f = 0 (trial {t})",
                               ds.spherical_derivative().is_zero))
        out.append(CheckResult(f"ds vs f = 0 (trial {t})",
                               vs.spherical_derivative().is_zero))
        out.append(CheckResult(f"vs ds f = ds f (trial {t})",
                               ds.spherical_value() == ds))
        out.append(CheckResult(f"vs^2 f = vs f (trial {t})",
                               vs.spherical_value() == vs))
        x = rand_base_point(rng)
        xc = x.conj()
        lhs = f.evaluate(xc)
        c = x.decompose()
        beta_val = x.im()  # I * beta
        rhs = (f.f0.evaluate_split(c.alpha, x.im().norm_sq(), beta_val)
               - f.f1.evaluate_split(c.alpha, x.im().norm_sq(), beta_val))
        out.append(CheckResult(f"f(x^c) = F0 - I*F1 (trial {t})", lhs == rhs))
    return out


def suite_leibniz(seed: int = 0, kmax: int = 0,
                  trials: int = 10) -> List[CheckResult]:
    """ds(f*g) = ds f * vs g + vs f * ds g for slice functions, and
    dc(f*g) = dc f * g + f * dc g for regular operands."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for t in range(trials):
        f = rand_regular_poly(rng)
        g = rand_regular_poly(rng)
        prod = slice_product(f, g)
        ds_rule = (slice_product(f.spherical_derivative(), g.spherical_value())
                   + slice_product(f.spherical_value(), g.spherical_derivative()))
        out.append(CheckResult(f"ds Leibniz (trial {t})",
                               prod.spherical_derivative() == ds_rule))
        dc_rule = (slice_product(f.slice_derivative(), g)
                   + slice_product(f, g.slice_derivative()))
        out.append(CheckResult(f"dc Leibniz (trial {t})",
                               prod.slice_derivative() == dc_rule))
    return out


def suite_main(seed: int = 0, kmax: int = 4,
               trials: int = 5) -> List[CheckResult]:
    """(dc ds)^k of a slice product against its binomial-weighted expansion."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for t in range(trials):
        f = rand_regular_poly(rng, max_degree=4)
        g = rand_regular_poly(rng, max_degree=4)
        prod = slice_product(f, g)
        for k in range(1, min(kmax, 4) + 1):
            lhs = iterate_op(prod, dcds, k)
            rhs = product_iteration_rhs(f, g, k)
            out.append(CheckResult(
                f"(dc ds)^{k} product expansion (trial {t})", lhs == rhs))
    return out


def suite_tables(seed: int = 0, kmax: int = 6,
                 points: int = 5) -> List[CheckResult]:
    """The iterated-derivative table for powers of the characteristic
    polynomial, including every stated vanishing case, exactly."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for _ in range(points):
        q0 = rand_base_point(rng)
        two_im = q0.im() * 2
        deltas = [char_poly(q0) ** p for p in range(kmax + 1)]
        lin = variable() - constant(q0)
        for p in range(kmax + 1):
            dp = deltas[p]
            dp_lin = slice_product(dp, lin)
            for k in range(p + 1):
                fact = Quaternion.real(math.factorial(k))
                tag = f"q0={q0} k={k} p={p}"
                # (ds dc)^k Delta^p at q0: 2 k! iff k = p >= 1
                v = iterate_op(dp, dsdc, k).evaluate(q0)
                if k == p:
                    want = fact * 2 if k >= 1 else Quaternion.of(1)
                else:
                    want = Quaternion.of(0)
                out.append(CheckResult(f"(ds dc)^k Delta^p [{tag}]", v == want))
                # (dc ds)^k Delta^p at q0: k! iff k = p
                v = iterate_op(dp, dcds, k).evaluate(q0)
                want = fact if k == p else Quaternion.of(0)
                out.append(CheckResult(f"(dc ds)^k Delta^p [{tag}]", v == want))
                # ds (dc ds)^k Delta^p at q0 = 0 for k < p (and constant
                # input kills it at k = p too)
                v = ds_dcds_pow(dp, k).evaluate(q0) if p > 0 else None
                if p > 0:
                    out.append(CheckResult(
                        f"ds (dc ds)^k Delta^p = 0 at q0 [{tag}]",
                        v == Quaternion.of(0)))
                # ds (dc ds)^k (Delta^p (x-q0)) at q0: k! iff k = p
                v = ds_dcds_pow(dp_lin, k).evaluate(q0)
                want = fact if k == p else Quaternion.of(0)
                out.append(CheckResult(
                    f"ds (dc ds)^k Delta^p (x-q0) [{tag}]", v == want))
                # dc (ds dc)^(p-1) Delta^p at q0 = 2 Im(q0) p!, zero below
                if k <= p - 1:
                    v = dc_dsdc_pow(dp, k).evaluate(q0)
                    want = (two_im * math.factorial(p) if k == p - 1
                            else Quaternion.of(0))
                    out.append(CheckResult(
                        f"dc (ds dc)^k Delta^p [{tag}]", v == want))
            # identically-zero cases beyond the polynomial degree
            out.append(CheckResult(
                f"ds (dc ds)^{p} Delta^{p} = 0 [q0={q0}]",
                ds_dcds_pow(deltas[p], p).is_zero))
            out.append(CheckResult(
                f"dc (ds dc)^{p} Delta^{p} = 0 [q0={q0}]",
                dc_dsdc_pow(deltas[p], p).is_zero))
            out.append(CheckResult(
                f"(dc ds)^{p + 1} Delta^{p} (x-q0) = 0 [q0={q0}]",
                iterate_op(dp_lin, dcds, p + 1).is_zero))
            out.append(CheckResult(
                f"(ds dc)^{p + 1} Delta^{p} (x-q0) = 0 [q0={q0}]",
                iterate_op(dp_lin, dsdc, p + 1).is_zero))
    return out


def suite_appendixB(seed: int = 0, kmax: int = 5,
                    points: int = 5) -> List[CheckResult]:
    """The degree-2 factor of dc(Delta^m (x-q0)) and the appendix table of
    iterated derivatives of dc(Delta^m) and dc(Delta^m (x-q0))."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for _ in range(points):
        q0 = rand_base_point(rng)
        im = q0.im()
        lin = variable() - constant(q0)
        for m in range(1, kmax + 1):
            fp = frak_poly(q0, m)
            tag = f"q0={q0} m={m}"
            out.append(CheckResult(
                f"vs frak at q0 [{tag}]",
                fp.spherical_value().evaluate(q0) == (im * im) * (2 * m)))
            out.append(CheckResult(
                f"ds frak at q0 [{tag}]",
                fp.spherical_derivative().evaluate(q0) == im * (-2 * m)))
            out.append(CheckResult(
                f"dc frak at q0 [{tag}]",
                fp.slice_derivative().evaluate(q0) == im * (2 * (m + 1))))
            out.append(CheckResult(
                f"(dc ds) frak constant [{tag}]",
                dcds(fp) == constant(2 * m + 1)))
            out.append(CheckResult(
                f"(ds dc) frak constant [{tag}]",
                dsdc(fp) == constant(2 * (2 * m + 1))))
            # factorization dc(Delta^m (x-q0)) = Delta^{m-1} * frak
            dm_lin = slice_product(char_poly(q0) ** m, lin)
            out.append(CheckResult(
                f"dc(Delta^m (x-q0)) factorization [{tag}]",
                dm_lin.slice_derivative()
                == slice_product(char_poly(q0) ** (m - 1), fp)))
        for k in range(kmax + 1):
            fact1 = math.factorial(k + 1)
            tag = f"q0={q0} k={k}"
            dck1 = (char_poly(q0) ** (k + 1)).slice_derivative()
            out.append(CheckResult(
                f"(dc ds)^k dc Delta^(k+1) [{tag}]",
                iterate_op(dck1, dcds, k).evaluate(q0) == im * (2 * fact1)))
            out.append(CheckResult(
                f"ds (dc ds)^k dc Delta^(k+1) [{tag}]",
                ds_dcds_pow(dck1, k).evaluate(q0)
                == Quaternion.real(2 * fact1)))
            dk_lin = slice_product(char_poly(q0) ** k, lin).slice_derivative()
            out.append(CheckResult(
                f"(dc ds)^k dc (Delta^k (x-q0)) [{tag}]",
                iterate_op(dk_lin, dcds, k).evaluate(q0)
                == Quaternion.real((2 * k + 1) * math.factorial(k))))
            dk1_lin = slice_product(char_poly(q0) ** (k + 1),
                                    lin).slice_derivative()
            out.append(CheckResult(
                f"ds (dc ds)^k dc (Delta^(k+1) (x-q0)) [{tag}]",
                ds_dcds_pow(dk1_lin, k).evaluate(q0) == im * (-2 * fact1)))
            # vanishing cases below the diagonal
            for kk in range(k):
                out.append(CheckResult(
                    f"(dc ds)^{kk} dc Delta^(k+1) = 0 at q0 [{tag}]",
                    iterate_op(dck1, dcds, kk).evaluate(q0).is_zero))
                out.append(CheckResult(
                    f"ds (dc ds)^{kk} dc Delta^(k+1) = 0 at q0 [{tag}]",
                    ds_dcds_pow(dck1, kk).evaluate(q0).is_zero))
                out.append(CheckResult(
                    f"(dc ds)^{kk} dc (Delta^k (x-q0)) = 0 at q0 [{tag}]",
                    iterate_op(dk_lin, dcds, kk).evaluate(q0).is_zero))
                out.append(CheckResult(
                    f"ds (dc ds)^{kk} dc (Delta^(k+1) (x-q0)) = 0 at q0 [{tag}]",
                    ds_dcds_pow(dk1_lin, kk).evaluate(q0).is_zero))
    return out


def suite_diffeq(seed: int = 0, kmax: int = 3,
                 trials: int = 10) -> List[CheckResult]:
    """Both residual stems of the countable family of differential identities
    vanish on random regular polynomials and on idempotent products."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    funcs: List[SliceFunction] = [rand_regular_poly(rng, max_degree=6)
                                  for _ in range(trials)]
    jq = Quaternion.of(0, 0, 1)
    funcs.append(slice_product(idempotent(jq, "+"), rand_regular_poly(rng)))
    funcs.append(slice_product(idempotent(jq, "-"), rand_regular_poly(rng)))
    for t, f in enumerate(funcs):
        for k in range(kmax + 1):
            r1, r2 = verify_diff_equation(f, k)
            out.append(CheckResult(f"diffeq residual 1 k={k} (fn {t})",
                                   r1.is_zero))
            out.append(CheckResult(f"diffeq residual 2 k={k} (fn {t})",
                                   r2.is_zero))
    return out


def suite_oracle(seed: int = 0, kmax: int = 6, trials: int = 8,
                 tol: float = 1e-8) -> List[CheckResult]:
    """Least-squares fit from point values against exact coefficient
    extraction, on random regular polynomials."""
    from .numeric import fit_coefficients_oracle, oracle_sample_points

    rng = random.Random(seed)
    out: List[CheckResult] = []
    for t in range(trials):
        f = rand_regular_poly(rng, max_degree=min(kmax, 6))
        q0 = rand_base_point(rng)
        n = 2 * min(kmax, 6) + 1
        exact = spherical_coefficients(f, q0, n)
        samples = oracle_sample_points(q0, 4 * (n + 1))
        fitted, residual = fit_coefficients_oracle(f.evaluate, q0, n, samples)
        dev = max((a - b.to_float()).abs_float()
                  for a, b in zip(fitted, exact.coeffs))
        out.append(CheckResult(
            f"oracle agreement (trial {t})", dev < tol,
            f"max deviation {dev:.3e}, residual {residual:.3e}"))
    return out


SUITES: dict = {
    "basicslice": suite_basicslice,
    "leibniz": suite_leibniz,
    "main": suite_main,
    "tables": suite_tables,
    "appendixB": suite_appendixB,
    "diffeq": suite_diffeq,
    "oracle": suite_oracle,
}


def run_suite(name: str, seed: int = 0,
              kmax: Optional[int] = None) -> List[CheckResult]:
    fn = SUITES[name]
    if kmax is None:
        return fn(seed=seed)
    return fn(seed=seed, kmax=kmax)
