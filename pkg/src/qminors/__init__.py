"""Exact computations with Sklyanin minors and quantum Pfaffians of the
orthogonal and symplectic quantum symmetric spaces."""

from .identities import (
    IdentityDescriptor,
    cayley_transform,
    evaluate_identity,
    grassmann_plucker_check,
    jacobi_check,
    muir_law_transform,
    muir_trace_check,
    parse_descriptor,
    quasidet_factorization_check,
    sylvester_check,
)
from .matrix_algebra import det_q, phi_embed, quantum_minor
from .ncalg import Element, LocalElement, make_presentation, normal_form
from .parser import parse_expression, parse_scalar
from .pfaffian import pf, pf_definition, pf_shuffle
from .scalars import Scalar, q
from .sklyanin import comatrix, sdet, sdet_explicit, sklyanin_minor
from .verifiers import run_verifier

__version__ = "0.1.0"

__all__ = [
    "Element", "IdentityDescriptor", "LocalElement", "Scalar",
    "cayley_transform", "comatrix", "det_q", "evaluate_identity", "grassmann_plucker_check",
    "jacobi_check", "make_presentation", "muir_law_transform", "muir_trace_check", "normal_form",
    "parse_descriptor", "parse_expression", "parse_scalar", "pf", "pf_definition", "pf_shuffle",
    "phi_embed", "q", "quantum_minor", "quasidet_factorization_check", "run_verifier", "sdet",
    "sdet_explicit", "sklyanin_minor", "sylvester_check",
]
