"""Exact quaternion arithmetic over rationals, float evaluation, and the
(alpha, beta, I) slice decomposition.

Components are stored as ``fractions.Fraction`` when exact and as ``float``
otherwise; mixed arithmetic degrades to float naturally.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Scalar = Union[Fraction, float]


def scalar(v) -> Scalar:
    """Coerce ints/strings/Fractions to Fraction; floats stay floats."""
    if isinstance(v, float):
        return v
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        if "." in v or "e" in v or "E" in v:
            return float(v)
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a scalar")


def _is_exact(v: Scalar) -> bool:
    return isinstance(v, Fraction)


def _scalar_str(v: Scalar) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return repr(v)


_TERM_RE = re.compile(
    r"^(?P<num>\d+(?:/\d+|\.\d+(?:[eE][+-]?\d+)?)?)?\s*\*?\s*(?P<unit>[ijk])?$"
)


def _rational_sqrt(v: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if v < 0:
        return None
    n, d = v.numerator, v.denominator
    sn, sd = math.isqrt(n), math.isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


@dataclass(frozen=True)
class Quaternion:
    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    @staticmethod
    def of(w=0, x=0, y=0, z=0) -> "Quaternion":
        return Quaternion(scalar(w), scalar(x), scalar(y), scalar(z))

    @staticmethod
    def real(v) -> "Quaternion":
        return Quaternion.of(v, 0, 0, 0)

    # -- predicates ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in (self.w, self.x, self.y, self.z))

    @property
    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    @property
    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        s = scalar(other)
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other) -> "Quaternion":
        # only scalars reach here, and real scalars commute
        return self.__mul__(other)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> Scalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def abs_float(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return self.conj() * (Fraction(1) / n if _is_exact(n) else 1.0 / n)

    def re(self) -> Scalar:
        return self.w

    def im(self) -> "Quaternion":
        return Quaternion(0 * self.w, self.x, self.y, self.z)

    def to_float(self) -> "Quaternion":
        return Quaternion(float(self.w), float(self.x), float(self.y), float(self.z))

    def approx_eq(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).abs_float() <= tol

    def decompose(self) -> "SliceCoords":
        """Split into alpha + I*beta with I a unit imaginary quaternion."""
        im = self.im()
        n2 = im.norm_sq()
        if n2 == 0:
            return SliceCoords(self.w, scalar(0), None, True)
        if _is_exact(n2):
            beta = _rational_sqrt(n2)
            if beta is not None:
                return SliceCoords(self.w, beta, im * (Fraction(1) / beta), True)
        beta_f = math.sqrt(float(n2))
        return SliceCoords(self.w, beta_f, im.to_float() * (1.0 / beta_f), False)

    # -- text / JSON --------------------------------------------------------

    @staticmethod
    def parse(text: str) -> "Quaternion":
        """Parse `a + b*i + c*j + d*k` with rational (`p/q`) or decimal parts."""
        s = text.strip()
        if not s:
            raise ValueError("empty quaternion literal")
        # split into signed terms
        parts = re.findall(r"[+-]?[^+-]+", s.replace(" ", ""))
        comps = {"": scalar(0), "i": scalar(0), "j": scalar(0), "k": scalar(0)}
        for part in parts:
            sign = 1
            body = part
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            m = _TERM_RE.match(body)
            if not m or (m.group("num") is None and m.group("unit") is None):
                raise ValueError(f"bad quaternion term {part!r} in {text!r}")
            num = scalar(m.group("num")) if m.group("num") is not None else scalar(1)
            unit = m.group("unit") or ""
            comps[unit] = comps[unit] + sign * num
        return Quaternion(comps[""], comps["i"], comps["j"], comps["k"])

    def __str__(self) -> str:
        parts = []
        for value, name in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if value == 0:
                continue
            s = _scalar_str(abs(value)) if name else _scalar_str(value)
            if name:
                term = f"{s}*{name}" if s != "1" else name
                parts.append(("- " if value < 0 else "+ ") + term)
            else:
                parts.append(s)
        if not parts:
            return "0"
        out = " ".join(parts)
        if out.startswith("+ "):
            out = out[2:]
        elif out.startswith("- "):
            out = "-" + out[2:]
        return out

    def to_json(self):
        return [_scalar_str(c) if _is_exact(c) else c
                for c in (self.w, self.x, self.y, self.z)]

    @staticmethod
    def from_json(data) -> "Quaternion":
        if len(data) != 4:
            raise ValueError("quaternion JSON form needs 4 entries")
        return Quaternion(*(scalar(c) for c in data))


@dataclass(frozen=True)
class SliceCoords:
    """alpha + I*beta form; unit is None at real points, beta_exact is False
    when beta had to be computed as a float square root."""

    alpha: Scalar
    beta: Scalar
    unit: Optional[Quaternion]
    beta_exact: bool

    def reconstruct(self) -> Quaternion:
        q = Quaternion.real(self.alpha)
        if self.unit is not None:
            q = q + self.unit * self.beta
        return q


ZERO = Quaternion.of(0)
ONE = Quaternion.of(1)
I = Quaternion.of(0, 1)
J = Quaternion.of(0, 0, 1)
K = Quaternion.of(0, 0, 0, 1)
