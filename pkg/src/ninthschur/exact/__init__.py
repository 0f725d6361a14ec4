"""Exact rings, sparse polynomials, matrices and generic minor identities."""
from fractions import Fraction

from .fields import DEFAULT_PRIME, PrimeFieldElem, exact_div
from .identities import (Verdict, bazin_check, box_compose, cauchy_binet_check, desnanot_jacobi_check,
                         gauss_minor_residuals, identity_verdict, jacobi_complement_check, plucker_check,
                         plucker_terms)
from .matrix import Matrix, MatrixError, det, gauss_decompose, inverse, minor, sort_sign
from .poly import DEFAULT_REGISTRY, RegistryError, SparsePoly, VarRegistry, poly_sum

Rational = Fraction

__all__ = [
    "DEFAULT_PRIME", "DEFAULT_REGISTRY", "Fraction", "Matrix", "MatrixError", "PrimeFieldElem", "Rational",
    "RegistryError", "SparsePoly", "VarRegistry", "Verdict", "bazin_check", "box_compose",
    "cauchy_binet_check", "desnanot_jacobi_check", "det", "exact_div", "gauss_decompose",
    "gauss_minor_residuals", "identity_verdict", "inverse", "jacobi_complement_check", "minor",
    "plucker_check", "plucker_terms", "poly_sum", "sort_sign",
]
