"""Graded GF(2) linear algebra for the critical modules and their Tutte sequences."""

from .presentation import (GradedPiece, ModulePresentation, free_module, gpark_presentation,
                           graded_dim, graded_piece, hilbert_function,
                           quotient_by_generator_multiples, specialize_to_Re,
                           toppling_presentation)

__all__ = [
    "GradedPiece", "ModulePresentation", "free_module", "gpark_presentation", "graded_dim",
    "graded_piece", "hilbert_function", "quotient_by_generator_multiples", "specialize_to_Re",
    "toppling_presentation",
]

from .maps import (MapSpec, build_phi0, build_phi1, build_psi0, build_psi1, map_spec_failures,
                   tutte_setup, verify_map_spec)
from .exactness import ExactnessReport, default_degree_bound, exactness_report, nzd_check

__all__ += [
    "MapSpec", "build_phi0", "build_phi1", "build_psi0", "build_psi1", "map_spec_failures",
    "tutte_setup", "verify_map_spec", "ExactnessReport", "default_degree_bound",
    "exactness_report", "nzd_check",
]
