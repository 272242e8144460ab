"""The radial family f_t(z) = t z / (1 + (t - 1)|z|) on the closed unit disc.

Each f_t fixes the origin and the boundary circle and moves every other
point along its ray. Scalar entry points take a :class:`RadialDiffeo` and a
:class:`DiscPoint`; the ``*_xy`` functions are their numpy counterparts for
whole grids and accept a bare parameter ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .specnorm2 import SymmetricForm

__all__ = [
    "DISC_TOL",
    "ORIGIN_RADIUS",
    "DiscPoint",
    "RadialDiffeo",
    "Jacobian2",
    "evaluate",
    "jacobian_at",
    "jacobian_det",
    "jacobian_norm",
    "norm_extrema",
    "map_xy",
    "jacobian_xy",
    "det_xy",
    "norm_xy",
]

DISC_TOL = 1e-12
ORIGIN_RADIUS = 1e-300


class DiscPoint(NamedTuple):
    x: float
    y: float

    @property
    def radius(self) -> float:
        return math.hypot(self.x, self.y)


class Jacobian2(NamedTuple):
    m11: float
    m12: float
    m21: float
    m22: float

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])

    def form(self) -> SymmetricForm:
        """The symmetric form (m11, m12, m22); only meaningful when m12 == m21."""
        return SymmetricForm(self.m11, self.m12, self.m22)

    def __sub__(self, other):
        return Jacobian2(*(p - q for p, q in zip(self, other)))


@dataclass(frozen=True)
class RadialDiffeo:
    """The map f_t for a parameter t > 0 (t = 1 is the identity)."""

    t: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and self.t > 0.0):
            raise DomainError(f"parameter t must be finite and positive, got {self.t!r}")

    def __call__(self, p) -> DiscPoint:
        return evaluate(self, p)

    def __matmul__(self, other: "RadialDiffeo") -> "RadialDiffeo":
        return RadialDiffeo(self.t * other.t)

    @property
    def is_identity(self) -> bool:
        return self.t == 1.0


def _param(d) -> float:
    if isinstance(d, RadialDiffeo):
        return d.t
    return RadialDiffeo(float(d)).t


def _point(p) -> DiscPoint:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"point ({x!r}, {y!r}) is not finite")
    if x * x + y * y > 1.0 + DISC_TOL:
        raise DomainError(f"point ({x}, {y}) lies outside the closed unit disc")
    return DiscPoint(x, y)


def _check_arrays(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x * x + y * y > 1.0 + DISC_TOL):
        raise DomainError("grid contains points outside the closed unit disc")
    return x, y


def evaluate(d, p) -> DiscPoint:
    """Apply f_t to one point of the closed disc."""
    t = _param(d)
    x, y = _point(p)
    q = 1.0 + (t - 1.0) * math.hypot(x, y)
    return DiscPoint(t * x / q, t * y / q)


def jacobian_at(d, p) -> Jacobian2:
    """Exact Jacobian matrix of f_t at ``p``.

    Away from the origin, with r = |p| and q = 1 + (t - 1) r::

        m11 = (t r + t (t - 1) y^2) / (r q^2)
        m12 = m21 = t (1 - t) x y / (r q^2)
        m22 = (t r + t (t - 1) x^2) / (r q^2)

    At the origin the matrix is t times the identity.
    """
    t = _param(d)
    x, y = _point(p)
    r = math.hypot(x, y)
    if r < ORIGIN_RADIUS:
        return Jacobian2(t, 0.0, 0.0, t)
    q = 1.0 + (t - 1.0) * r
    denom = r * q * q
    off = t * (1.0 - t) * x * y / denom
    return Jacobian2(
        (t * r + t * (t - 1.0) * y * y) / denom,
        off,
        off,
        (t * r + t * (t - 1.0) * x * x) / denom,
    )


def jacobian_det(d, p) -> float:
    """det J(f_t)(p) = t^2 / (1 + (t - 1) r)^3, always positive."""
    t = _param(d)
    r = _point(p).radius
    return t * t / (1.0 + (t - 1.0) * r) ** 3


def jacobian_norm(d, p) -> float:
    """Operator 2-norm of J(f_t)(p) in closed form.

    The Jacobian has eigenvalue t / q on the tangential direction and
    t / q^2 on the radial one. For t >= 1 the tangential one dominates and
    the norm is t / (1 + (t - 1) r); for t < 1 the radial one does.
    """
    t = _param(d)
    r = _point(p).radius
    q = 1.0 + (t - 1.0) * r
    return t / q if t >= 1.0 else t / (q * q)


def norm_extrema(d) -> tuple[float, float]:
    """(max, min) of the Jacobian operator norm over the closed disc.

    For t >= 1 this is (t, 1): t at the origin, 1 on the boundary. For
    0 < t < 1 the norm t / q^2 runs from t at the origin to 1 / t on the
    boundary.
    """
    t = _param(d)
    if t >= 1.0:
        return t, 1.0
    return 1.0 / t, t


# vectorized counterparts


def map_xy(t: float, x, y):
    """f_t applied to arrays of coordinates."""
    t = _param(t)
    x, y = _check_arrays(x, y)
    q = 1.0 + (t - 1.0) * np.hypot(x, y)
    return t * x / q, t * y / q


def jacobian_xy(t: float, x, y):
    """Jacobian entries (m11, m12, m22) over arrays; m21 equals m12."""
    t = _param(t)
    x, y = _check_arrays(x, y)
    r = np.hypot(x, y)
    at_origin = r < ORIGIN_RADIUS
    rs = np.where(at_origin, 1.0, r)
    q = 1.0 + (t - 1.0) * rs
    denom = rs * q * q
    m11 = np.where(at_origin, t, (t * rs + t * (t - 1.0) * y * y) / denom)
    m12 = np.where(at_origin, 0.0, t * (1.0 - t) * x * y / denom)
    m22 = np.where(at_origin, t, (t * rs + t * (t - 1.0) * x * x) / denom)
    return m11, m12, m22


def det_xy(t: float, x, y):
    t = _param(t)
    x, y = _check_arrays(x, y)
    return t * t / (1.0 + (t - 1.0) * np.hypot(x, y)) ** 3


def norm_xy(t: float, x, y):
    t = _param(t)
    x, y = _check_arrays(x, y)
    q = 1.0 + (t - 1.0) * np.hypot(x, y)
    return t / q if t >= 1.0 else t / (q * q)
