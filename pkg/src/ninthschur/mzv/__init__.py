"""Schur multiple zeta values: truncations, word algebra, regularization and closed forms."""
from .numeric import ZetaTable, c_coefficients, eta, mzv, mzv_star, precision
from .regularize import RegPolynomial, asymptotic_check, reg_value, regularize
from .trunc import (DiagonalIndex, MzvIndexError, column_index, row_index, schur_zeta_float, schur_zeta_trunc,
                    zeta_trunc)
from .values import (RectangleValue, checkerboard_values, explicit_121, prop_121_determinant, r332_232_check,
                     rectangle_value, zagier_232)
from .words import WordPoly, shuffle, stuffle

__all__ = [
    "DiagonalIndex", "MzvIndexError", "RectangleValue", "RegPolynomial", "WordPoly", "ZetaTable",
    "asymptotic_check", "c_coefficients", "checkerboard_values", "column_index", "eta", "explicit_121", "mzv",
    "mzv_star", "precision", "prop_121_determinant", "r332_232_check", "reg_value", "rectangle_value",
    "regularize", "row_index", "schur_zeta_float", "schur_zeta_trunc", "shuffle", "stuffle", "zagier_232",
    "zeta_trunc",
]
