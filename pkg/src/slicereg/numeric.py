"""Floating-point slice functions, finite-difference slice derivatives,
Cassini-ball geometry, and the least-squares coefficient-fitting oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import IllConditioned, StepTooLarge, TooFewSamples
from .expansion import delta_basis_term
from .quaternion import Quaternion
from .slicefn import SliceFunction

PointFn = Callable[[float, float], Quaternion]

DEFAULT_FD_STEP = 1e-5
ORACLE_RESIDUAL_TOL = 1e-8
CONDITION_LIMIT = 1e10


@dataclass
class NumericSliceFunction:
    """Callable stem components (alpha, beta) -> float quaternion, with an
    optional closed-form slice derivative for cross-checks."""

    f0: PointFn
    f1: PointFn
    analytic_dc: Optional["NumericSliceFunction"] = None

    def evaluate(self, x: Quaternion) -> Quaternion:
        c = x.to_float().decompose()
        v0 = self.f0(float(c.alpha), float(c.beta))
        if c.beta == 0:
            return v0
        return v0 + c.unit * self.f1(float(c.alpha), float(c.beta))

    def value_in_slice(self, alpha: float, beta: float, unit: Quaternion) -> Quaternion:
        return self.f0(alpha, beta) + unit * self.f1(alpha, beta)


def exp_function() -> NumericSliceFunction:
    """exp(alpha + I*beta) = e^alpha (cos(beta) + I sin(beta)); its slice
    derivative is itself."""
    f = NumericSliceFunction(
        f0=lambda a, b: Quaternion.of(math.exp(a) * math.cos(b)),
        f1=lambda a, b: Quaternion.of(math.exp(a) * math.sin(b)),
    )
    f.analytic_dc = f
    return f


def wrap_slice_function(f: SliceFunction) -> NumericSliceFunction:
    """Float wrapper around an exact slice function."""
    return NumericSliceFunction(
        f0=lambda a, b: f.f0.evaluate(a, b).to_float(),
        f1=lambda a, b: f.f1.evaluate(a, b).to_float(),
    )


def fd_slice_derivative(nf: NumericSliceFunction, alpha: float, beta: float,
                        h: float = DEFAULT_FD_STEP,
                        unit: Quaternion = Quaternion.of(0, 1)) -> Quaternion:
    """Central-difference slice derivative at alpha + unit*beta; O(h^2)."""
    if not 0 < h < beta:
        raise StepTooLarge(f"need 0 < h < beta, got h={h}, beta={beta}")
    inv2h = 0.5 / h
    da0 = (nf.f0(alpha + h, beta) - nf.f0(alpha - h, beta)) * inv2h
    db0 = (nf.f0(alpha, beta + h) - nf.f0(alpha, beta - h)) * inv2h
    da1 = (nf.f1(alpha + h, beta) - nf.f1(alpha - h, beta)) * inv2h
    db1 = (nf.f1(alpha, beta + h) - nf.f1(alpha, beta - h)) * inv2h
    return (da0 + db1) * 0.5 + unit * ((da1 - db0) * 0.5)


@dataclass(frozen=True)
class CassiniBall:
    """U(q0, R) = { x : |Delta_{q0}(x)| < R^2 }."""

    q0: Quaternion
    radius: float

    def delta_abs(self, x: Quaternion) -> float:
        c = self.q0.to_float()
        xf = x.to_float()
        value = xf * xf - xf * (2 * float(c.re())) + Quaternion.of(float(c.norm_sq()))
        return value.abs_float()

    def contains(self, x: Quaternion) -> bool:
        return self.delta_abs(x) < self.radius ** 2


def cassini_contains(ball: CassiniBall, x: Quaternion) -> bool:
    return ball.contains(x)


def _left_mul_matrix(b: Quaternion) -> np.ndarray:
    """4x4 real matrix of s -> b*s on (w, x, y, z) components."""
    bw, bx, by, bz = (float(b.w), float(b.x), float(b.y), float(b.z))
    return np.array([
        [bw, -bx, -by, -bz],
        [bx, bw, -bz, by],
        [by, bz, bw, -bx],
        [bz, -by, bx, bw],
    ])


def _quat_vec(q: Quaternion) -> np.ndarray:
    return np.array([float(q.w), float(q.x), float(q.y), float(q.z)])


def _second_unit(unit: Quaternion) -> Quaternion:
    """A float imaginary unit well away from +-unit, for two-slice sampling."""
    u = unit.to_float()
    for cand in (Quaternion.of(0, 0, 1), Quaternion.of(0, 0, 0, 1),
                 Quaternion.of(0, 1)):
        if abs(u.x * float(cand.x) + u.y * float(cand.y) + u.z * float(cand.z)) < 0.9:
            return cand
    raise AssertionError("unreachable")


def oracle_sample_points(q0: Quaternion, count: int,
                         circle_radius: float = 0.25) -> List[Quaternion]:
    """Points on two circles around the sphere of q0, in two slice planes.

    A single slice cannot pin down all four real dimensions of each
    quaternionic coefficient, so half the points live in a second plane.
    """
    c = q0.to_float().decompose()
    alpha0, beta0 = float(c.alpha), float(c.beta)
    units = [c.unit, _second_unit(c.unit)]
    pts: List[Quaternion] = []
    per = (count + 1) // 2
    for ui, unit in enumerate(units):
        for t in range(per):
            # offset phase per slice so the two circles are not congruent
            theta = 2 * math.pi * t / per + 0.5 * ui
            a = alpha0 + circle_radius * math.cos(theta)
            b = beta0 + circle_radius * math.sin(theta)
            pts.append(Quaternion.of(a) + unit * b)
    return pts[:count]


def fit_coefficients_oracle(evaluator: Callable[[Quaternion], Quaternion],
                            q0: Quaternion, truncation: int,
                            samples: Sequence[Quaternion],
                            residual_tol: float = ORACLE_RESIDUAL_TOL,
                            condition_limit: float = CONDITION_LIMIT,
                            ) -> Tuple[List[Quaternion], float]:
    """Least-squares fit of right-multiplying coefficients s_n from samples.

    The system sum_n B_n(x_j) * s_n = f(x_j) is linear over the reals in the
    4(N+1) components of the s_n because the basis values multiply on the
    left.  Columns are scaled by basis magnitude before solving.
    Returns (coefficients, max residual).
    """
    n_coeff = truncation + 1
    if len(samples) < n_coeff:
        raise TooFewSamples(f"need at least {n_coeff} samples, got {len(samples)}")
    basis = [delta_basis_term(q0, n) for n in range(n_coeff)]
    basis_vals = [[b.evaluate(x).to_float() for b in basis] for x in samples]

    a_mat = np.zeros((4 * len(samples), 4 * n_coeff))
    rhs = np.zeros(4 * len(samples))
    for j, x in enumerate(samples):
        rhs[4 * j: 4 * j + 4] = _quat_vec(evaluator(x))
        for n in range(n_coeff):
            a_mat[4 * j: 4 * j + 4, 4 * n: 4 * n + 4] = \
                _left_mul_matrix(basis_vals[j][n])

    col_scale = np.max(np.abs(a_mat), axis=0)
    col_scale[col_scale == 0] = 1.0
    scaled = a_mat / col_scale
    if np.linalg.cond(scaled) > condition_limit:
        raise IllConditioned("sample geometry gives an ill-conditioned system")
    sol, *_ = np.linalg.lstsq(scaled, rhs, rcond=None)
    sol = sol / col_scale
    residual = float(np.max(np.abs(a_mat @ sol - rhs))) if len(sol) else 0.0
    coeffs = [Quaternion.of(*sol[4 * n: 4 * n + 4]) for n in range(n_coeff)]
    return coeffs, residual


@dataclass
class ConvergenceRow:
    alpha: float
    beta: float
    slice_unit: Quaternion
    abs_error: float


def convergence_report(evaluator: Callable[[Quaternion], Quaternion],
                       expansion, ball: CassiniBall,
                       grid: int = 8) -> Tuple[List[ConvergenceRow], float, float]:
    """Truncation error of the expansion over a grid inside the ball.

    Returns (rows, max_error, mean_error)."""
    from .expansion import evaluate_expansion

    c = ball.q0.to_float().decompose()
    alpha0, beta0 = float(c.alpha), float(c.beta)
    units = [c.unit, _second_unit(c.unit)]
    # euclidean reach of the ball from the sphere of q0: d(d + 2 beta0) = R^2
    span = math.sqrt(beta0 * beta0 + ball.radius ** 2) - beta0
    rows: List[ConvergenceRow] = []
    for unit in units:
        for ia in range(grid):
            for ib in range(grid):
                a = alpha0 + span * (2 * ia / max(grid - 1, 1) - 1)
                b = beta0 + span * (2 * ib / max(grid - 1, 1) - 1)
                if b <= 0:
                    continue
                x = Quaternion.of(a) + unit * b
                if not ball.contains(x):
                    continue
                err = (evaluator(x) - evaluate_expansion(expansion, x)).abs_float()
                rows.append(ConvergenceRow(a, b, unit, err))
    if not rows:
        return rows, 0.0, 0.0
    errs = [r.abs_error for r in rows]
    return rows, max(errs), sum(errs) / len(errs)


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    lines = ["alpha,beta,slice_unit,abs_error"]
    for r in rows:
        lines.append(f"{r.alpha!r},{r.beta!r},{r.slice_unit},{r.abs_error!r}")
    return "\n".join(lines) + "\n"
