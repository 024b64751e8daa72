"""Sparse Laurent polynomials in (alpha, beta) with quaternionic coefficients.

beta exponents may be negative; alpha exponents are nonnegative.  These are
the building blocks of stem functions: a slice function is induced by a pair
of them on the beta > 0 branch.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import NegativePowerAtZero
from .quaternion import Quaternion, Scalar, scalar

Key = Tuple[int, int]  # (deg_alpha >= 0, deg_beta in Z)


class LaurentStem:
    """Immutable sparse map (deg_alpha, deg_beta) -> nonzero Quaternion."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Key, Quaternion] | Iterable[Tuple[Key, Quaternion]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean: Dict[Key, Quaternion] = {}
        for (a, b), c in items:
            if a < 0:
                raise ValueError("alpha exponents must be nonnegative")
            if not c.is_zero:
                clean[(a, b)] = clean.get((a, b), Quaternion.of(0)) + c
                if clean[(a, b)].is_zero:
                    del clean[(a, b)]
        self._terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentStem":
        return LaurentStem()

    @staticmethod
    def constant(c) -> "LaurentStem":
        if not isinstance(c, Quaternion):
            c = Quaternion.real(c)
        return LaurentStem({(0, 0): c})

    @staticmethod
    def monomial(deg_alpha: int, deg_beta: int, coeff: Quaternion) -> "LaurentStem":
        return LaurentStem({(deg_alpha, deg_beta): coeff})

    # -- views --------------------------------------------------------------

    @property
    def terms(self) -> Dict[Key, Quaternion]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self._terms.values())

    def min_beta_degree(self) -> int:
        if not self._terms:
            return 0
        return min(b for (_, b) in self._terms)

    def even_in_beta(self) -> bool:
        return all(b % 2 == 0 for (_, b) in self._terms)

    def odd_in_beta(self) -> bool:
        return all(b % 2 == 1 for (_, b) in self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentStem") -> "LaurentStem":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Quaternion.of(0)) + c
        return LaurentStem(out)

    def __sub__(self, other: "LaurentStem") -> "LaurentStem":
        return self + (-other)

    def __neg__(self) -> "LaurentStem":
        return LaurentStem({k: -c for k, c in self._terms.items()})

    def __mul__(self, other: "LaurentStem") -> "LaurentStem":
        # coefficient products keep left-to-right order
        out: Dict[Key, Quaternion] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, Quaternion.of(0)) + c1 * c2
        return LaurentStem(out)

    def scale_left(self, q: Quaternion) -> "LaurentStem":
        return LaurentStem({k: q * c for k, c in self._terms.items()})

    def scale_right(self, q: Quaternion) -> "LaurentStem":
        return LaurentStem({k: c * q for k, c in self._terms.items()})

    def scale(self, s) -> "LaurentStem":
        s = scalar(s)
        return LaurentStem({k: c * s for k, c in self._terms.items()})

    def map_coeffs(self, fn) -> "LaurentStem":
        return LaurentStem({k: fn(c) for k, c in self._terms.items()})

    # -- calculus -----------------------------------------------------------

    def partial_derivative(self, var: str) -> "LaurentStem":
        if var not in ("alpha", "beta"):
            raise ValueError("var must be 'alpha' or 'beta'")
        out: Dict[Key, Quaternion] = {}
        for (a, b), c in self._terms.items():
            if var == "alpha":
                if a == 0:
                    continue
                out[(a - 1, b)] = c * a
            else:
                if b == 0:
                    continue
                out[(a, b - 1)] = c * b
        return LaurentStem(out)

    def div_beta(self) -> "LaurentStem":
        return LaurentStem({(a, b - 1): c for (a, b), c in self._terms.items()})

    def mul_beta(self) -> "LaurentStem":
        return LaurentStem({(a, b + 1): c for (a, b), c in self._terms.items()})

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, alpha, beta) -> Quaternion:
        alpha, beta = scalar(alpha), scalar(beta)
        total = Quaternion.of(0)
        for (a, b), c in self._terms.items():
            if b < 0 and beta == 0:
                raise NegativePowerAtZero(
                    f"beta^{b} is undefined at beta = 0")
            total = total + c * (alpha ** a * beta ** b)
        return total

    def evaluate_split(self, alpha: Scalar, beta_sq: Scalar, im: Quaternion) -> Quaternion:
        """Evaluate F0-even/F1-odd style terms exactly at a rational point.

        For even beta exponents uses beta^2 = beta_sq; every odd exponent term
        c*alpha^a*beta^b is returned as im * (c*alpha^a*(beta^2)^((b-1)/2)),
        i.e. already multiplied by I*beta.  Caller is responsible for parity.
        """
        total = Quaternion.of(0)
        for (a, b), c in self._terms.items():
            if b % 2 == 0:
                if b < 0 and beta_sq == 0:
                    raise NegativePowerAtZero(f"beta^{b} undefined at beta = 0")
                total = total + c * (alpha ** a * beta_sq ** (b // 2))
            else:
                if beta_sq == 0:
                    raise NegativePowerAtZero("odd beta power at a real point")
                total = total + im * (c * (alpha ** a * beta_sq ** ((b - 1) // 2)))
        return total

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentStem) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def approx_eq(self, other: "LaurentStem", tol: float = 1e-10) -> bool:
        keys = set(self._terms) | set(other._terms)
        zero = Quaternion.of(0)
        return all(self._terms.get(k, zero).approx_eq(other._terms.get(k, zero), tol)
                   for k in keys)

    def max_coeff_abs(self) -> float:
        if not self._terms:
            return 0.0
        return max(c.abs_float() for c in self._terms.values())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for (a, b) in sorted(self._terms):
            c = self._terms[(a, b)]
            piece = f"({c})"
            if a:
                piece += f" * a^{a}"
            if b:
                piece += f" * b^{b}"
            chunks.append(piece)
        return " + ".join(chunks)


class StemPair:
    """Components (F0, F1) of a stem function, restricted to beta > 0."""

    __slots__ = ("f0", "f1")

    def __init__(self, f0: LaurentStem, f1: LaurentStem):
        self.f0 = f0
        self.f1 = f1

    @property
    def real_extendable(self) -> bool:
        """True when f extends to real points: F0 even and polynomial in beta,
        F1 odd in beta with only positive exponents (stem symmetry)."""
        return (self.f0.min_beta_degree() >= 0
                and self.f0.even_in_beta()
                and self.f1.odd_in_beta()
                and (self.f1.is_zero or self.f1.min_beta_degree() >= 1))

    @property
    def is_exact(self) -> bool:
        return self.f0.is_exact and self.f1.is_exact

    def __eq__(self, other) -> bool:
        return (isinstance(other, StemPair)
                and self.f0 == other.f0 and self.f1 == other.f1)

    def __hash__(self):
        return hash((self.f0, self.f1))

    def __repr__(self) -> str:
        return f"StemPair(F0 = {self.f0!r}, F1 = {self.f1!r})"


HALF = Fraction(1, 2)
