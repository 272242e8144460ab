"""Radial diffeomorphisms of the closed unit disc and their C1 distance to the identity."""

from .errors import DomainError
from .specnorm2 import (
    CandidateWeights,
    SpectralSolution,
    SymmetricForm,
    candidate_weights,
    lagrange_multipliers,
    max_on_disc,
    spectral_norm,
)
from .radial_family import (
    DiscPoint,
    Jacobian2,
    RadialDiffeo,
    evaluate,
    jacobian_at,
    jacobian_det,
    jacobian_norm,
    norm_extrema,
)
from .group_metric import (
    MaximizerConfig,
    MetricReport,
    compose,
    entrywise_sups,
    inverse,
    metric,
    sup_jacobian_distance,
    sup_value_distance,
)
from .convergence_lab import (
    ConvergenceRow,
    MembershipReport,
    RateEstimate,
    convergence_table,
    default_schedule,
    fit_rate,
    verify_membership,
)

__version__ = "0.1.0"
