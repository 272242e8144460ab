"""Maximum of F(u, v) = (au + bv)^2 + (bu + cv)^2 over the closed unit disc.

F is the squared image length of (u, v) under the symmetric matrix
M = [[a, b], [b, c]], so its maximum on the disc is the squared operator
2-norm of M. The maximum is found from the stationarity system of F on the
unit circle: the multipliers are the roots of

    lambda^2 - (a^2 + 2b^2 + c^2) lambda + (b^2 - ac)^2 = 0,

and in the case a^2 > c^2 the two stationary values are convex combinations
with weights A / (A + B) and B / (A + B), where

    A = (a^2 - c^2 + sqrt(D))^2,   B = 4 (a + c)^2 b^2,
    D = (a^2 - c^2)^2 + 4 b^2 (a + c)^2.

The case a^2 < c^2 is reduced to the previous one by swapping a and c, and
a^2 = c^2 is handled directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "SymmetricForm",
    "SpectralSolution",
    "CandidateWeights",
    "lagrange_multipliers",
    "candidate_weights",
    "max_on_disc",
    "spectral_norm",
    "quadratic_form",
]


@dataclass(frozen=True)
class SymmetricForm:
    """The symmetric matrix [[a, b], [b, c]]."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"form coefficient {name}={value!r} is not finite")

    @classmethod
    def from_matrix(cls, m11, m12, m22) -> "SymmetricForm":
        return cls(float(m11), float(m12), float(m22))

    def swapped(self) -> "SymmetricForm":
        return SymmetricForm(self.c, self.b, self.a)

    def __call__(self, u: float, v: float) -> float:
        return quadratic_form(self, u, v)


@dataclass(frozen=True)
class SpectralSolution:
    lambda_plus: float
    lambda_minus: float
    max_value: float
    argmax: tuple[float, float]
    candidate_values: tuple[float, float]


@dataclass(frozen=True)
class CandidateWeights:
    A: float
    B: float

    @property
    def weights(self) -> tuple[float, float]:
        """The convex weights (A / (A + B), B / (A + B))."""
        total = self.A + self.B
        return self.A / total, self.B / total


def _as_form(form) -> SymmetricForm:
    if isinstance(form, SymmetricForm):
        return form
    a, b, c = form
    return SymmetricForm(float(a), float(b), float(c))


def quadratic_form(form: SymmetricForm, u: float, v: float) -> float:
    a, b, c = form.a, form.b, form.c
    return (a * u + b * v) ** 2 + (b * u + c * v) ** 2


def _sqrt_discriminant(a: float, b: float, c: float) -> float:
    # sqrt((a^2 - c^2)^2 + 4 b^2 (a + c)^2) = |a + c| sqrt((a - c)^2 + 4 b^2)
    return abs(a + c) * math.hypot(a - c, 2.0 * b)


def _normalized(f: SymmetricForm) -> tuple[float, float, float, float]:
    # F is quadratic in (a, b, c); work at unit scale so fourth powers neither
    # underflow nor overflow, then multiply values back by scale^2
    scale = max(abs(f.a), abs(f.b), abs(f.c))
    if scale == 0.0:
        return 0.0, 0.0, 0.0, 0.0
    return scale, f.a / scale, f.b / scale, f.c / scale


def lagrange_multipliers(form) -> tuple[float, float]:
    """Return the multipliers (lambda_plus, lambda_minus) of F on the unit circle.

    These are the eigenvalues of M^2. The smaller root is recovered from the
    product of the roots, ``(b^2 - ac)^2``, so it keeps full relative accuracy.
    """
    scale, a, b, c = _normalized(_as_form(form))
    if scale == 0.0:
        return 0.0, 0.0
    trace = a * a + 2.0 * b * b + c * c
    lam_plus = 0.5 * (trace + _sqrt_discriminant(a, b, c))
    det = b * b - a * c
    lam_minus = min(det * det / lam_plus, lam_plus)
    s2 = scale * scale
    return lam_plus * s2, lam_minus * s2


def _shifted_root(a: float, b: float, c: float) -> float:
    # a^2 - c^2 + sqrt(D), evaluated without cancellation when a^2 < c^2
    diff = (a - c) * (a + c)
    sqrt_d = _sqrt_discriminant(a, b, c)
    if diff >= 0.0:
        return diff + sqrt_d
    denom = sqrt_d - diff
    return 4.0 * b * b * (a + c) ** 2 / denom


def candidate_weights(form) -> CandidateWeights:
    """Return the weights A and B of the two stationary-value candidates."""
    f = _as_form(form)
    a, b, c = f.a, f.b, f.c
    root = _shifted_root(a, b, c)
    return CandidateWeights(A=root * root, B=4.0 * (a + c) ** 2 * b * b)


def _canonical(u: float, v: float) -> tuple[float, float]:
    if u < 0.0 or (u == 0.0 and v < 0.0):
        u, v = -u, -v
    return u + 0.0, v + 0.0


def _dominant_branch(a: float, b: float, c: float):
    # requires a^2 > c^2; returns (max, argmax, candidates)
    sqrt_d = _sqrt_discriminant(a, b, c)
    root = _shifted_root(a, b, c)
    off = 2.0 * (a + c) * b
    A = root * root
    B = off * off
    w_a = A / (A + B)
    w_b = B / (A + B)
    first = w_a * (a * a + b * b) + w_b * (a * a + b * b + sqrt_d)
    second = w_a * (b * b + c * c) + w_b * (b * b + c * c - sqrt_d)
    if second > first:
        # the eigenvector of the smaller multiplier is orthogonal to the first
        norm = math.hypot(root, off)
        return second, (-off / norm, root / norm), (first, second)
    norm = math.hypot(root, off)
    return first, (root / norm, off / norm), (first, second)


def max_on_disc(form) -> SpectralSolution:
    """Maximize F over the closed unit disc.

    Returns the two multipliers, the maximum, a unit vector attaining it and
    the pair of candidate values the maximum was chosen from. The argmax is
    canonicalized so that its first nonzero coordinate is positive.

    Examples
    --------
    >>> max_on_disc(SymmetricForm(1.0, 1.0, 1.0)).max_value
    4.0
    """
    f = _as_form(form)
    lam_plus, lam_minus = lagrange_multipliers(f)
    scale, a, b, c = _normalized(f)
    if scale == 0.0:
        return SpectralSolution(0.0, 0.0, 0.0, (1.0, 0.0), (0.0, 0.0))
    s2 = scale * scale

    if b == 0.0:
        candidates = (f.a * f.a, f.c * f.c)
        if candidates[1] > candidates[0]:
            value, argmax = candidates[1], (0.0, 1.0)
        else:
            value, argmax = candidates[0], (1.0, 0.0)
        return SpectralSolution(lam_plus, lam_minus, value, argmax, candidates)

    diff = (a - c) * (a + c)
    if diff > 0.0:
        value, (u, v), candidates = _dominant_branch(a, b, c)
    elif diff < 0.0:
        value, (v, u), candidates = _dominant_branch(c, b, a)
    elif a == c:
        # F = (a^2 + b^2)(u^2 + v^2) + 4ab uv
        candidates = (a * a + b * b + 2.0 * a * b, a * a + b * b - 2.0 * a * b)
        h = math.sqrt(0.5)
        if candidates[1] > candidates[0]:
            value, (u, v) = candidates[1], (h, -h)
        else:
            value, (u, v) = candidates[0], (h, h)
    else:
        # a = -c: F = (a^2 + b^2)(u^2 + v^2)
        value = a * a + b * b
        candidates = (value, value)
        u, v = 1.0, 0.0

    return SpectralSolution(
        lam_plus,
        lam_minus,
        value * s2,
        _canonical(u, v),
        (candidates[0] * s2, candidates[1] * s2),
    )


def spectral_norm(form) -> float:
    """Operator 2-norm of [[a, b], [b, c]], i.e. sqrt of the maximum of F."""
    return math.sqrt(max_on_disc(form).max_value)
