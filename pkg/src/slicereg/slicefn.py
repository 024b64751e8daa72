"""Slice functions as stem pairs, with the spherical value/derivative, the
slice derivative and its conjugate, the slice product, and the standard
constructors (monomials, characteristic polynomials, idempotents).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from .errors import NotAUnit, RealBasePoint, RealPointNotExtendable
from .quaternion import Quaternion, scalar
from .stem import HALF, LaurentStem, StemPair


class SliceFunction:
    """f(alpha + I*beta) = F0(alpha, beta) + I * F1(alpha, beta)."""

    __slots__ = ("stem", "label")

    def __init__(self, f0: LaurentStem, f1: LaurentStem, label: str = ""):
        self.stem = StemPair(f0, f1)
        self.label = label

    @property
    def f0(self) -> LaurentStem:
        return self.stem.f0

    @property
    def f1(self) -> LaurentStem:
        return self.stem.f1

    @property
    def is_zero(self) -> bool:
        return self.f0.is_zero and self.f1.is_zero

    @property
    def is_exact(self) -> bool:
        return self.stem.is_exact

    @property
    def real_extendable(self) -> bool:
        return self.stem.real_extendable

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x: Quaternion) -> Quaternion:
        """Evaluate at a quaternion point.

        When the stem pair has the F0-even / F1-odd beta parity, evaluation
        at a rational point is exact even if |Im(x)| is irrational, because
        only beta^2 = |Im(x)|^2 and I*beta = Im(x) enter.
        """
        coords = x.decompose()
        if coords.beta == 0:
            if not self.real_extendable:
                raise RealPointNotExtendable(
                    "function is not defined at real points")
            return self.f0.evaluate(coords.alpha, 0)
        if self.f0.even_in_beta() and self.f1.odd_in_beta():
            beta_sq = x.im().norm_sq()
            return (self.f0.evaluate_split(coords.alpha, beta_sq, x.im())
                    + self.f1.evaluate_split(coords.alpha, beta_sq, x.im()))
        value0 = self.f0.evaluate(coords.alpha, coords.beta)
        value1 = self.f1.evaluate(coords.alpha, coords.beta)
        return value0 + coords.unit * value1

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "SliceFunction") -> "SliceFunction":
        return SliceFunction(self.f0 + other.f0, self.f1 + other.f1)

    def __sub__(self, other: "SliceFunction") -> "SliceFunction":
        return SliceFunction(self.f0 - other.f0, self.f1 - other.f1)

    def __neg__(self) -> "SliceFunction":
        return SliceFunction(-self.f0, -self.f1)

    def __mul__(self, other: "SliceFunction") -> "SliceFunction":
        return slice_product(self, other)

    def __pow__(self, n: int) -> "SliceFunction":
        return slice_power(self, n)

    def scale_right(self, q: Quaternion) -> "SliceFunction":
        return SliceFunction(self.f0.scale_right(q), self.f1.scale_right(q))

    def scale_left(self, q: Quaternion) -> "SliceFunction":
        return SliceFunction(self.f0.scale_left(q), self.f1.scale_left(q))

    def scale(self, s) -> "SliceFunction":
        return SliceFunction(self.f0.scale(s), self.f1.scale(s))

    def __eq__(self, other) -> bool:
        return isinstance(other, SliceFunction) and self.stem == other.stem

    def __hash__(self):
        return hash(self.stem)

    def approx_eq(self, other: "SliceFunction", tol: float = 1e-10) -> bool:
        return (self.f0.approx_eq(other.f0, tol)
                and self.f1.approx_eq(other.f1, tol))

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"SliceFunction{tag}(F0 = {self.f0!r}, F1 = {self.f1!r})"

    # -- operators ----------------------------------------------------------

    def spherical_value(self) -> "SliceFunction":
        return SliceFunction(self.f0, LaurentStem.zero())

    def spherical_derivative(self) -> "SliceFunction":
        return SliceFunction(self.f1.div_beta(), LaurentStem.zero())

    def slice_derivative(self) -> "SliceFunction":
        da0 = self.f0.partial_derivative("alpha")
        db0 = self.f0.partial_derivative("beta")
        da1 = self.f1.partial_derivative("alpha")
        db1 = self.f1.partial_derivative("beta")
        return SliceFunction((da0 + db1).scale(HALF), (da1 - db0).scale(HALF))

    def conj_slice_derivative(self) -> "SliceFunction":
        da0 = self.f0.partial_derivative("alpha")
        db0 = self.f0.partial_derivative("beta")
        da1 = self.f1.partial_derivative("alpha")
        db1 = self.f1.partial_derivative("beta")
        return SliceFunction((da0 - db1).scale(HALF), (da1 + db0).scale(HALF))

    def slice_conjugate(self) -> "SliceFunction":
        """Coefficient-wise quaternionic conjugate of the stem."""
        return SliceFunction(self.f0.map_coeffs(Quaternion.conj),
                             self.f1.map_coeffs(Quaternion.conj))

    # -- predicates ---------------------------------------------------------

    def is_regular(self) -> bool:
        """Exact vanishing of the conjugate slice derivative."""
        if not self.is_exact:
            raise ValueError("regularity is decided on exact stems only")
        d = self.conj_slice_derivative()
        return d.f0.is_zero and d.f1.is_zero

    def is_slice_preserving(self) -> bool:
        return all(c.is_real
                   for s in (self.f0, self.f1)
                   for c in s.terms.values())

    def is_one_slice_preserving(self, unit: Quaternion) -> bool:
        """All stem coefficients in span{1, unit}."""
        u = unit.im()
        for s in (self.f0, self.f1):
            for c in s.terms.values():
                v = c.im()
                # v must be a real multiple of u: vanishing cross product
                if (v.y * u.z != v.z * u.y or v.z * u.x != v.x * u.z
                        or v.x * u.y != v.y * u.x):
                    return False
        return True


# -- constructors ------------------------------------------------------------


def constant(q) -> SliceFunction:
    if not isinstance(q, Quaternion):
        q = Quaternion.real(q)
    return SliceFunction(LaurentStem.constant(q), LaurentStem.zero(), label=str(q))


def variable() -> SliceFunction:
    return SliceFunction(LaurentStem.monomial(1, 0, Quaternion.of(1)),
                         LaurentStem.monomial(0, 1, Quaternion.of(1)),
                         label="x")


def monomial_stems(n: int) -> StemPair:
    """Stem components of x^n via the binomial expansion of (alpha+i*beta)^n."""
    f0 = {}
    f1 = {}
    for k in range(n + 1):
        c = Fraction(math.comb(n, k))
        if k % 2 == 0:
            f0[(n - k, k)] = Quaternion.real(c * (-1) ** (k // 2))
        else:
            f1[(n - k, k)] = Quaternion.real(c * (-1) ** ((k - 1) // 2))
    return StemPair(LaurentStem(f0), LaurentStem(f1))


def from_polynomial(coeffs: Sequence) -> SliceFunction:
    """Sum of x^n * a_n with right coefficients a_0 ... a_d."""
    f0 = LaurentStem.zero()
    f1 = LaurentStem.zero()
    for n, a in enumerate(coeffs):
        if not isinstance(a, Quaternion):
            a = Quaternion.real(a)
        if a.is_zero:
            continue
        mono = monomial_stems(n)
        f0 = f0 + mono.f0.scale_right(a)
        f1 = f1 + mono.f1.scale_right(a)
    return SliceFunction(f0, f1)


def char_poly(q0: Quaternion) -> SliceFunction:
    """Delta_{q0}(x) = x^2 - 2 Re(q0) x + |q0|^2, vanishing on the sphere of q0."""
    if q0.im().is_zero:
        raise RealBasePoint("characteristic polynomial needs a non-real base point")
    two_re = 2 * q0.re()
    f = from_polynomial([Quaternion.real(q0.norm_sq()),
                         Quaternion.real(-two_re),
                         Quaternion.of(1)])
    f.label = f"Delta({q0})"
    return f


def _check_unit(j: Quaternion, tol: float = 1e-10) -> None:
    sq = j * j
    target = Quaternion.of(-1)
    if j.is_exact:
        if sq != target:
            raise NotAUnit(f"{j} squares to {sq}, not -1")
    elif not sq.approx_eq(target, tol):
        raise NotAUnit(f"{j} squares to {sq}, not -1 (within {tol})")


def idempotent(j: Quaternion, sign: str = "+") -> SliceFunction:
    """ell^{+,J} = (1 - Jfun*J)/2 or ell^{-,J} = (1 + Jfun*J)/2."""
    _check_unit(j)
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    s = -1 if sign == "+" else 1
    half_j = j * (Fraction(s, 2) if j.is_exact else s * 0.5)
    return SliceFunction(LaurentStem.constant(Quaternion.of(Fraction(1, 2))),
                         LaurentStem.constant(half_j),
                         label=f"ell({sign},{j})")


def j_function() -> SliceFunction:
    """The slice function x -> Im(x)/|Im(x)|, stem (0, 1)."""
    return SliceFunction(LaurentStem.zero(),
                         LaurentStem.constant(Quaternion.of(1)),
                         label="Jfun")


def imaginary_part_function() -> SliceFunction:
    """The slice function x -> Im(x) = I*beta, stem (0, beta)."""
    return SliceFunction(LaurentStem.zero(),
                         LaurentStem.monomial(0, 1, Quaternion.of(1)),
                         label="Im")


# -- products ----------------------------------------------------------------


def slice_product(f: SliceFunction, g: SliceFunction) -> SliceFunction:
    return SliceFunction(f.f0 * g.f0 - f.f1 * g.f1,
                         f.f0 * g.f1 + f.f1 * g.f0)


def slice_power(f: SliceFunction, n: int) -> SliceFunction:
    if n < 0:
        raise ValueError("slice powers need n >= 0")
    out = constant(1)
    for _ in range(n):
        out = slice_product(out, f)
    return out


# -- operator iteration helpers ----------------------------------------------


def dcds(f: SliceFunction) -> SliceFunction:
    return f.spherical_derivative().slice_derivative()


def dsdc(f: SliceFunction) -> SliceFunction:
    return f.slice_derivative().spherical_derivative()


def iterate_op(f: SliceFunction, op, k: int) -> SliceFunction:
    for _ in range(k):
        f = op(f)
    return f
