"""Curves y^{q^{n-1}} + ... + y^q + y = f(x) built from minimal-value-set
polynomials over F_{q^n}, with exhaustive certification of their point
counts, genus, value sets, pole orders at infinity, and the telescopic /
symmetric / Castle structure of the Weierstrass semigroup."""

from mvspcurves._core import (
    AmbiguousValuation,
    BoundExceeded,
    InvalidInput,
    certify,
    construct,
    h_family_r,
    pole_orders,
    semigroup,
    snm_identity,
    sweep_csv,
    telescopic_genus,
    weierstrass_generators,
)

__all__ = [
    "AmbiguousValuation",
    "BoundExceeded",
    "InvalidInput",
    "certify",
    "construct",
    "h_family_r",
    "pole_orders",
    "semigroup",
    "snm_identity",
    "sweep_csv",
    "telescopic_genus",
    "weierstrass_generators",
]
