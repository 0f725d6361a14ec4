"""Ninth-variation skew Schur functions and Schur multiple zeta values."""

__version__ = "0.1.0"
