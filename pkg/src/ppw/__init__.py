"""Preprojective algebras of Coxeter words and their graded modules."""

__version__ = "0.1.0"
