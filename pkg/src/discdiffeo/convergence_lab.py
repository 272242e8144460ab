"""Numerical check that f_t -> id in the C1 distance as t -> 1+.

Rows of :func:`convergence_table` carry the known upper bounds next to the
measured sups: t - 1 for the value gap, t^2 - 1 for the diagonal Jacobian
entries and t (t - 1) for the off-diagonal ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .group_metric import MaximizerConfig, entrywise_sups, inverse, metric
from .radial_family import RadialDiffeo, det_xy, map_xy

__all__ = [
    "ConvergenceRow",
    "RateEstimate",
    "CheckResult",
    "MembershipReport",
    "default_schedule",
    "convergence_table",
    "fit_rate",
    "verify_membership",
]

BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class ConvergenceRow:
    t: float
    sup_value: float
    sup_jac: float
    d_g: float
    bound_value: float
    bound_diag: float
    bound_offdiag: float
    sup_diag: float | None = None
    sup_offdiag: float | None = None

    def bounds_hold(self, slack: float = BOUND_SLACK) -> bool:
        ok = self.sup_value <= self.bound_value + slack
        if self.sup_diag is not None:
            ok = ok and self.sup_diag <= self.bound_diag + slack
        if self.sup_offdiag is not None:
            ok = ok and self.sup_offdiag <= self.bound_offdiag + slack
        return ok


@dataclass(frozen=True)
class RateEstimate:
    exponent: float
    r_squared: float
    intercept: float = 0.0


def default_schedule(k_min: int = 1, k_max: int = 20) -> list[float]:
    """t = 1 + 2^-k for k = k_min..k_max, decreasing toward 1."""
    return [1.0 + 2.0 ** -k for k in range(k_min, k_max + 1)]


def convergence_table(
    t_values,
    cfg: MaximizerConfig | None = None,
    convention: str = "spectral",
    entrywise: bool = False,
) -> list[ConvergenceRow]:
    """One row of d(f_t, id) per t, in input order.

    With ``entrywise=True`` the diagonal and off-diagonal entry sups are
    also measured on the polar grid so the entry bounds can be checked.
    """
    t_values = [float(t) for t in t_values]
    if not t_values:
        raise DomainError("t_values must be nonempty")
    bad = [t for t in t_values if not (math.isfinite(t) and t > 1.0)]
    if bad:
        raise DomainError(f"every t must exceed 1, got {bad}")
    cfg = cfg or MaximizerConfig()
    ident = RadialDiffeo(1.0)

    rows = []
    for t in t_values:
        ft = RadialDiffeo(t)
        rep = metric(ft, ident, cfg, convention)
        sup_diag = sup_off = None
        if entrywise:
            sup_diag, sup_off = entrywise_sups(ft, ident, cfg)
        rows.append(
            ConvergenceRow(
                t=t,
                sup_value=rep.sup_value_dist,
                sup_jac=rep.sup_jac_dist,
                d_g=rep.d_g,
                bound_value=t - 1.0,
                bound_diag=t * t - 1.0,
                bound_offdiag=t * (t - 1.0),
                sup_diag=sup_diag,
                sup_offdiag=sup_off,
            )
        )
    return rows


def fit_rate(rows) -> RateEstimate:
    """Least-squares slope of log d_g against log(t - 1)."""
    if len(rows) < 3:
        raise DomainError("rate fit needs at least 3 rows")
    d = np.array([row.d_g for row in rows], dtype=float)
    s = np.array([row.t - 1.0 for row in rows], dtype=float)
    if np.any(d <= 0.0) or np.any(s <= 0.0):
        raise DomainError("rate fit needs positive d_g and t > 1")
    lx, ly = np.log(s), np.log(d)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    ss_res = float(np.sum(resid**2))
    # a constant column is fitted exactly by the flat line
    r2 = 1.0 if ss_tot == 0.0 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return RateEstimate(exponent=float(slope) + 0.0, r_squared=r2, intercept=float(intercept))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    witness: tuple[float, float]
    tolerance: float


@dataclass
class MembershipReport:
    t: float
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _sample_disc(n_radii: int, n_angles: int):
    rs = np.linspace(0.0, 1.0, n_radii)
    th = 2.0 * np.pi * np.arange(n_angles) / n_angles
    r, a = np.meshgrid(rs, th, indexing="ij")
    x, y = r * np.cos(a), r * np.sin(a)
    # rounding can push |z| a hair past 1
    scale = np.maximum(np.hypot(x, y), 1.0)
    return (x / scale).ravel(), (y / scale).ravel()


def verify_membership(
    t: float,
    cfg: MaximizerConfig | None = None,
    n_radii: int = 317,
    n_angles: int = 317,
    boundary_tol: float = 1e-12,
    roundtrip_tol: float = 1e-10,
) -> MembershipReport:
    """Check on a dense sample that f_t is a boundary-fixing orientation-preserving
    diffeomorphism of the disc.

    Failures are recorded in the report rather than raised. ``cfg`` is
    accepted for symmetry with the other entry points; the sample size is
    set by ``n_radii`` x ``n_angles``.
    """
    d = RadialDiffeo(t)
    rep = MembershipReport(t=d.t)
    x, y = _sample_disc(n_radii, n_angles)

    th = 2.0 * np.pi * np.arange(4 * n_angles) / (4 * n_angles)
    bx, by = np.cos(th), np.sin(th)
    fx, fy = map_xy(d.t, bx, by)
    err = np.hypot(fx - bx, fy - by)
    i = int(np.argmax(err))
    rep.checks.append(
        CheckResult("boundary_fixed", bool(err[i] <= boundary_tol), float(err[i]), (float(bx[i]), float(by[i])), boundary_tol)
    )

    det = det_xy(d.t, x, y)
    i = int(np.argmin(det))
    rep.checks.append(CheckResult("det_positive", bool(det[i] > 0.0), float(det[i]), (float(x[i]), float(y[i])), 0.0))

    fx, fy = map_xy(d.t, x, y)
    norms = np.hypot(fx, fy)
    i = int(np.argmax(norms))
    rep.checks.append(
        CheckResult("image_in_disc", bool(norms[i] <= 1.0 + 1e-12), float(norms[i]), (float(x[i]), float(y[i])), 1.0 + 1e-12)
    )

    # rescale images pushed past the circle by rounding before inverting
    scale = np.maximum(norms, 1.0)
    gx, gy = map_xy(inverse(d).t, fx / scale, fy / scale)
    err = np.hypot(gx - x, gy - y)
    i = int(np.argmax(err))
    rep.checks.append(
        CheckResult("inverse_roundtrip", bool(err[i] <= roundtrip_tol), float(err[i]), (float(x[i]), float(y[i])), roundtrip_tol)
    )
    return rep
