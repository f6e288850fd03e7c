"""Correction terms of +-1 surgery from finite models of CFK^infinity, and
lower bounds for non-orientable genera of knots in punctured n CP^2."""

from .engine import (
    Region,
    d_minus_one_surgery,
    d_plus_one_surgery,
    homology,
    mirror,
    tensor,
    tensor_power,
    truncate,
    validate_standard,
)
from .model import (
    Chain,
    FundamentalComplex,
    Generator,
    build_9_42,
    build_trefoil,
    build_unknot,
    parse_complex,
    serialize_complex,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "FundamentalComplex",
    "Generator",
    "Region",
    "build_9_42",
    "build_trefoil",
    "build_unknot",
    "d_minus_one_surgery",
    "d_plus_one_surgery",
    "homology",
    "mirror",
    "parse_complex",
    "serialize_complex",
    "tensor",
    "tensor_power",
    "truncate",
    "validate_standard",
]
