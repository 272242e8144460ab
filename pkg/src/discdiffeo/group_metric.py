"""Group law on the radial family and the C1 distance between two members.

The distance is

    d(f, g) = sup_z |f(z) - g(z)| + sup_z ||J(f)(z) - J(g)(z)||.

Both f_t and its Jacobian commute with rotations, and so do the Euclidean
norm and the operator 2-norm. Under the ``spectral`` convention each sup
over the disc therefore equals a sup over the ray {(r, 0) : 0 <= r <= 1},
which is found by a grid scan followed by golden-section refinement of the
best bracket. The ``entrywise_max`` convention (largest absolute entry) is
not rotation invariant and is scanned on a full polar grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import DomainError
from .radial_family import RadialDiffeo, jacobian_at, jacobian_xy
from .specnorm2 import spectral_norm

__all__ = [
    "Convention",
    "MaximizerConfig",
    "MetricReport",
    "compose",
    "inverse",
    "identity",
    "polar_grid",
    "maximize_on_interval",
    "sup_value_distance",
    "sup_jacobian_distance",
    "entrywise_sups",
    "metric",
]

Convention = Literal["spectral", "entrywise_max"]
CONVENTIONS = ("spectral", "entrywise_max")

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MaximizerConfig:
    """Resolution of the sup computations.

    ``grid_points`` and ``refine_iters`` drive the 1-D ray search; ``tol``
    stops the golden-section refinement once the bracket is narrower.
    ``polar_radii`` x ``polar_angles`` is the 2-D grid used by the
    entrywise convention.
    """

    grid_points: int = 4097
    refine_iters: int = 60
    tol: float = 1e-10
    polar_radii: int = 2049
    polar_angles: int = 2049

    def __post_init__(self):
        if self.grid_points < 3:
            raise DomainError("grid_points must be at least 3")
        if self.refine_iters < 1:
            raise DomainError("refine_iters must be positive")
        if not self.tol > 0.0:
            raise DomainError("tol must be positive")
        if self.polar_radii < 2 or self.polar_angles < 4:
            raise DomainError("polar grid needs at least 2 radii and 4 angles")


@dataclass(frozen=True)
class MetricReport:
    sup_value_dist: float
    sup_jac_dist: float
    d_g: float
    argmax_radius_value: float
    argmax_radius_jac: float
    convention: str


def _as_diffeo(d) -> RadialDiffeo:
    return d if isinstance(d, RadialDiffeo) else RadialDiffeo(float(d))


def identity() -> RadialDiffeo:
    return RadialDiffeo(1.0)


def compose(d1, d2) -> RadialDiffeo:
    """f_s o f_t = f_{st}."""
    return RadialDiffeo(_as_diffeo(d1).t * _as_diffeo(d2).t)


def inverse(d) -> RadialDiffeo:
    """f_t^{-1} = f_{1/t}."""
    return RadialDiffeo(1.0 / _as_diffeo(d).t)


def maximize_on_interval(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: MaximizerConfig,
    grid_values: np.ndarray | None = None,
) -> tuple[float, float]:
    """Global max of ``fn`` on [lo, hi] by grid scan plus golden section.

    Returns ``(value, argmax)``. The grid has ``cfg.grid_points`` equally
    spaced nodes; the bracket around the best node is refined and the best
    point seen overall is returned, so the result never falls below the
    grid maximum.
    """
    nodes = np.linspace(lo, hi, cfg.grid_points)
    if grid_values is None:
        grid_values = np.array([fn(float(r)) for r in nodes])
    i = int(np.argmax(grid_values))
    best_x, best_f = float(nodes[i]), float(grid_values[i])

    a = float(nodes[max(i - 1, 0)])
    b = float(nodes[min(i + 1, len(nodes) - 1)])
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = fn(x1), fn(x2)
    for _ in range(cfg.refine_iters):
        if b - a <= cfg.tol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = fn(x2)
    for x, fx in ((x1, f1), (x2, f2)):
        if fx > best_f:
            best_x, best_f = x, fx
    return best_f, best_x


def _value_gap(t1: float, t2: float, r):
    # |f_t1 - f_t2| along the ray: |t1 - t2| r (1 - r) / (q1 q2)
    q1 = 1.0 + (t1 - 1.0) * r
    q2 = 1.0 + (t2 - 1.0) * r
    return abs(t1 - t2) * r * (1.0 - r) / (q1 * q2)


def sup_value_distance(d1, d2, cfg: MaximizerConfig | None = None) -> tuple[float, float]:
    """sup over the disc of |f_t1(z) - f_t2(z)| and a radius attaining it."""
    cfg = cfg or MaximizerConfig()
    t1, t2 = _as_diffeo(d1).t, _as_diffeo(d2).t
    if t1 == t2:
        return 0.0, 0.0
    nodes = np.linspace(0.0, 1.0, cfg.grid_points)
    return maximize_on_interval(
        lambda r: float(_value_gap(t1, t2, r)),
        0.0,
        1.0,
        cfg,
        grid_values=_value_gap(t1, t2, nodes),
    )


def _spectral_jac_gap(d1: RadialDiffeo, d2: RadialDiffeo, r: float) -> float:
    diff = jacobian_at(d1, (r, 0.0)) - jacobian_at(d2, (r, 0.0))
    return spectral_norm(diff.form())


def polar_grid(radii: int, angles: int) -> tuple[np.ndarray, np.ndarray]:
    """Radii linspace(0, 1, radii) and angles 2 pi j / angles."""
    return np.linspace(0.0, 1.0, radii), 2.0 * np.pi * np.arange(angles) / angles


def _entrywise_scan(d1: RadialDiffeo, d2: RadialDiffeo, cfg: MaximizerConfig):
    # per-radius maxima of |d m11|, |d m22| and |d m12| over all angles
    rs, thetas = polar_grid(cfg.polar_radii, cfg.polar_angles)
    c, s = np.cos(thetas), np.sin(thetas)
    diag = np.empty(len(rs))
    off = np.empty(len(rs))
    for i, r in enumerate(rs):
        x, y = r * c, r * s
        a11, a12, a22 = jacobian_xy(d1.t, x, y)
        b11, b12, b22 = jacobian_xy(d2.t, x, y)
        diag[i] = max(np.max(np.abs(a11 - b11)), np.max(np.abs(a22 - b22)))
        off[i] = np.max(np.abs(a12 - b12))
    return rs, diag, off


def entrywise_sups(d1, d2, cfg: MaximizerConfig | None = None) -> tuple[float, float]:
    """Polar-grid sups of the diagonal and off-diagonal Jacobian entry gaps."""
    cfg = cfg or MaximizerConfig()
    _, diag, off = _entrywise_scan(_as_diffeo(d1), _as_diffeo(d2), cfg)
    return float(diag.max()), float(off.max())


def sup_jacobian_distance(
    d1, d2, cfg: MaximizerConfig | None = None, convention: Convention = "spectral"
) -> tuple[float, float]:
    """sup over the disc of ||J(f_t1) - J(f_t2)|| and a radius attaining it."""
    cfg = cfg or MaximizerConfig()
    d1, d2 = _as_diffeo(d1), _as_diffeo(d2)
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}")
    if d1.t == d2.t:
        return 0.0, 0.0
    if convention == "spectral":
        return maximize_on_interval(lambda r: _spectral_jac_gap(d1, d2, r), 0.0, 1.0, cfg)
    rs, diag, off = _entrywise_scan(d1, d2, cfg)
    per_radius = np.maximum(diag, off)
    i = int(np.argmax(per_radius))
    return float(per_radius[i]), float(rs[i])


def metric(
    d1, d2, cfg: MaximizerConfig | None = None, convention: Convention = "spectral"
) -> MetricReport:
    cfg = cfg or MaximizerConfig()
    value, r_value = sup_value_distance(d1, d2, cfg)
    jac, r_jac = sup_jacobian_distance(d1, d2, cfg, convention)
    return MetricReport(
        sup_value_dist=value,
        sup_jac_dist=jac,
        d_g=value + jac,
        argmax_radius_value=r_value,
        argmax_radius_jac=r_jac,
        convention=convention,
    )
