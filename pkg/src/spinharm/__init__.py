"""Spin spherical harmonics and a verification harness for their addition theorems."""
from .angular import CGExact, HalfInt, cg, cg_exact, half
from .harmonics import (SpinHarmonicLabel, quadrature_inner_product, spin_harmonic,
                        spin_harmonic_block)
from .poly import (Direction, legendre_derivs, legendre_p, legendre_p_deriv, random_directions,
                   spherical_harmonic, spherical_harmonics_row)
from .tensor import (SpinorTensor, projector_spinor, projector_tensor, standard_spinor,
                     standard_tensor, sym_braces, sym_braces_traceless)

__version__ = "0.1.0"

__all__ = [
    "CGExact", "Direction", "HalfInt", "SpinHarmonicLabel", "SpinorTensor", "cg", "cg_exact", "half",
    "legendre_derivs", "legendre_p", "legendre_p_deriv", "projector_spinor", "projector_tensor",
    "quadrature_inner_product", "random_directions", "spherical_harmonic", "spherical_harmonics_row",
    "spin_harmonic", "spin_harmonic_block", "standard_spinor", "standard_tensor", "sym_braces",
    "sym_braces_traceless", "__version__",
]
