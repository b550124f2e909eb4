"""Parabolic representations of two-bridge knots: exact Frobenius algebras, torsions and TQFT signatures."""

__version__ = "0.1.0"
