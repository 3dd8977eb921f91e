"""Extended Han-Zhang codes over finite fields: construction, ECP decoding, deep holes and MDS extensions."""

from .codes import (
    CodeDescriptor,
    EvalConfig,
    Polynomial,
    classify_ehz,
    egrs,
    ehz,
    encode,
    encode_ehz,
    grs,
    min_distance_bruteforce,
    roth_lempel,
    syndrome,
    u_vector,
)
from .deephole import DeepHoleQuery, covering_radius, is_deep_hole
from .ecp import build_ecp, decode, ecp_decode, verify_ecp
from .errors import CodingError
from .fqmat import FqMatrix
from .gf import FieldElement, FieldSpec, make_field
from .mdsgen import algorithm2_enumerate, extend_with_deep_hole, monomial_equivalent
from .oracle import OracleBudget, error_distance, nearest_codeword

__version__ = "0.1.0"

__all__ = [
    "CodeDescriptor", "CodingError", "DeepHoleQuery", "EvalConfig", "FieldElement", "FieldSpec",
    "FqMatrix", "OracleBudget", "Polynomial", "algorithm2_enumerate", "build_ecp", "classify_ehz",
    "covering_radius", "decode", "ecp_decode", "egrs", "ehz", "encode", "encode_ehz", "error_distance",
    "extend_with_deep_hole", "grs", "is_deep_hole", "make_field", "min_distance_bruteforce",
    "monomial_equivalent", "nearest_codeword", "roth_lempel", "syndrome", "u_vector", "verify_ecp",
]
