"""Slow, independent reference computations for checking the main modules.

Nothing here calls into :mod:`specnorm2`, the closed-form Jacobian or the
ray maximizer; each routine recomputes its quantity from scratch (eigenvalues,
brute-force sweeps, finite differences, extended precision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import mpmath
import numpy as np

from .errors import DomainError
from .radial_family import DiscPoint, Jacobian2

__all__ = [
    "GridSpec",
    "eigen_norm",
    "eigen_norm_xy",
    "grid_max_form",
    "map_complex",
    "hp_evaluate",
    "fd_jacobian",
    "grid_sup_disc",
    "grid_inf_disc",
]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class GridSpec:
    radii: int
    angles: int

    def __post_init__(self):
        if self.radii < 2 or self.angles < 4:
            raise DomainError("GridSpec needs radii >= 2 and angles >= 4")


def _abc(form) -> tuple[float, float, float]:
    if hasattr(form, "a"):
        return float(form.a), float(form.b), float(form.c)
    a, b, c = form
    return float(a), float(b), float(c)


def eigen_norm(form) -> float:
    """max |eigenvalue| of [[a, b], [b, c]].

    The larger-magnitude root comes from the sign-matched branch of the
    quadratic formula, the other from the product of the roots.
    """
    a, b, c = _abc(form)
    tr = a + c
    s = math.hypot(a - c, 2.0 * b)
    big = 0.5 * (tr + math.copysign(s, tr))
    if big == 0.0:
        return 0.0
    small = (a * c - b * b) / big
    return max(abs(big), abs(small))


def eigen_norm_xy(a, b, c):
    """Vectorized :func:`eigen_norm` over arrays of entries."""
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    tr = a + c
    s = np.hypot(a - c, 2.0 * b)
    big = 0.5 * (tr + np.copysign(s, tr))
    safe = np.where(big == 0.0, 1.0, big)
    small = np.where(big == 0.0, 0.0, (a * c - b * b) / safe)
    return np.maximum(np.abs(big), np.abs(small))


def grid_max_form(form, n: int) -> float:
    """max of (au + bv)^2 + (bu + cv)^2 over the n unit vectors at angles 2 pi k / n."""
    if n < 4:
        raise DomainError("grid_max_form needs n >= 4")
    a, b, c = _abc(form)
    u, v = _circle(n)
    first = a * u
    first += b * v
    second = b * u
    second += c * v
    first *= first
    second *= second
    first += second
    return float(first.max())


@lru_cache(maxsize=4)
def _circle(n: int) -> tuple[np.ndarray, np.ndarray]:
    th = 2.0 * np.pi * np.arange(n) / n
    u, v = np.cos(th), np.sin(th)
    u.flags.writeable = False
    v.flags.writeable = False
    return u, v


def map_complex(t: float, x: float, y: float) -> tuple[float, float]:
    z = complex(x, y)
    w = t * z / (1.0 + (t - 1.0) * abs(z))
    return w.real, w.imag


def hp_evaluate(t, x, y, dps: int = 50) -> tuple[mpmath.mpf, mpmath.mpf]:
    """f_t(x, y) in ``dps``-digit arithmetic; inputs are taken as exact decimals."""
    with mpmath.workdps(dps):
        t, x, y = mpmath.mpf(str(t)), mpmath.mpf(str(x)), mpmath.mpf(str(y))
        q = 1 + (t - 1) * mpmath.sqrt(x * x + y * y)
        return t * x / q, t * y / q


def fd_jacobian(d, p, h: float = 1e-6) -> Jacobian2:
    """Central-difference Jacobian of f_t at ``p``.

    The stencil must stay inside the disc and away from the origin, where
    f_t is not smooth along the difference directions.
    """
    t = d.t if hasattr(d, "t") else float(d)
    x, y = float(p[0]), float(p[1])
    if not h > 0.0:
        raise DomainError("step h must be positive")
    r = math.hypot(x, y)
    if r <= 10.0 * h:
        raise DomainError(f"point radius {r} too close to the origin for step {h}")
    if r + h > 1.0:
        raise DomainError(f"stencil around radius {r} leaves the disc")
    fxp = map_complex(t, x + h, y)
    fxm = map_complex(t, x - h, y)
    fyp = map_complex(t, x, y + h)
    fym = map_complex(t, x, y - h)
    return Jacobian2(
        (fxp[0] - fxm[0]) / (2.0 * h),
        (fyp[0] - fym[0]) / (2.0 * h),
        (fxp[1] - fxm[1]) / (2.0 * h),
        (fyp[1] - fym[1]) / (2.0 * h),
    )


def _grid_extreme(pointwise, g: GridSpec, sign: float):
    rs = np.linspace(0.0, 1.0, g.radii)
    th = 2.0 * np.pi * np.arange(g.angles) / g.angles
    c, s = np.cos(th), np.sin(th)
    rows = max(1, _CHUNK // g.angles)
    best, where = -math.inf, (0, 0)
    for i0 in range(0, g.radii, rows):
        r = rs[i0 : i0 + rows, None]
        vals = sign * np.broadcast_to(np.asarray(pointwise(r * c, r * s), dtype=float), (len(r), g.angles))
        k = int(np.argmax(vals))
        # strict comparison keeps the smallest (i, j) on ties
        if vals.flat[k] > best:
            best = float(vals.flat[k])
            where = (i0 + k // g.angles, k % g.angles)
    i, j = where
    return sign * best, DiscPoint(float(rs[i] * c[j]), float(rs[i] * s[j]))


def grid_sup_disc(pointwise: Callable, g: GridSpec) -> tuple[float, DiscPoint]:
    """Max of ``pointwise(x, y)`` over the polar grid, r = 0..1 inclusive.

    ``pointwise`` receives coordinate arrays and returns an array of the
    same shape. Ties go to the smallest (radius index, angle index).
    """
    return _grid_extreme(pointwise, g, 1.0)


def grid_inf_disc(pointwise: Callable, g: GridSpec) -> tuple[float, DiscPoint]:
    return _grid_extreme(pointwise, g, -1.0)
