"""Exact-arithmetic verification of the degree-24 radical evaluations,
their coverings and divisors, and the attached modular q-series identities."""

__version__ = "0.1.0"
