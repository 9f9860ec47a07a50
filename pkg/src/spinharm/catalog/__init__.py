"""Registry of addition theorems with brute-force verification and coefficient extraction."""
from .extract import ConditioningError, ExtractedCoefficients, extract_coefficients, recognize_rational
from .sums import hermiticity_residual, scalar_sum, seed_sum
from .registry import (FAMILIES, REGISTRY, DomainError, TheoremSpec, UnsupportedModeError,
                       evaluate_lhs, evaluate_rhs, get, residual, theorems, vanishing_norm)
from .sweep import CaseResult, SweepConfig, VerificationReport, sample_pairs, sweep

__all__ = [
    "FAMILIES", "REGISTRY", "CaseResult", "ConditioningError", "DomainError", "ExtractedCoefficients",
    "SweepConfig", "TheoremSpec", "UnsupportedModeError", "VerificationReport", "evaluate_lhs",
    "evaluate_rhs", "extract_coefficients", "get", "recognize_rational", "residual", "sample_pairs",
    "sweep", "theorems", "vanishing_norm", "hermiticity_residual", "scalar_sum", "seed_sum",
]
