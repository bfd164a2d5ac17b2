"""Exact-arithmetic toolkit for quadratic algebras on three generators:
presentations, truncated noncommutative Groebner bases, point-scheme
geometry, plane-cubic classification, and the named algebra families."""

__version__ = "0.1.0"
