"""Box-constrained bi-criteria rating from pairwise comparisons."""

from ._troprate import (
    DimensionError,
    DomainError,
    InfeasibleError,
    OutOfFrontError,
    ValidationError,
    compute_front,
    kleene_star,
    objectives,
    rate,
    solutions_at,
    spectral_radius,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "InfeasibleError",
    "OutOfFrontError",
    "ValidationError",
    "compute_front",
    "kleene_star",
    "objectives",
    "rate",
    "solutions_at",
    "spectral_radius",
]
