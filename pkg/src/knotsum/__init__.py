"""Quantum knot invariants of braid closures from homological state sums.

The central object is a three-variable Laurent polynomial attached to a
braid word, computed as a state sum over a braid-group action on the
twisted homology of configuration spaces of the punctured disc (realised
combinatorially through code-sequence bases and slot-transfer matrices).
Specialising its coefficients recovers the N-th coloured Jones polynomial
(generic q) and the N-th coloured Alexander invariant (q at a 2N-th root
of unity).  Independent quantum-side oracles (Kauffman bracket, reduced
Burau determinant, R-matrix traces) cross-validate every pipeline output.
"""

from .braid import BraidWord, markov_variants, parse_braid
from .invariant import (
    InvariantResult,
    class_E,
    coloured_alexander,
    coloured_jones,
    compute_invariant,
    intersection_I,
    lambda_invariant,
    pair_with_G,
    state_sum_S,
)
from .lawrence import LawrenceSpace, SparseVector, apply_braid, enumerate_basis
from .ring import (
    CyclotomicInt,
    LaurentPoly,
    SpecializationSpec,
    cyclotomic_polynomial,
    equal_up_to_unit,
    poly_from_json,
    poly_to_json,
    specialize,
)

__all__ = [
    "BraidWord",
    "CyclotomicInt",
    "InvariantResult",
    "LaurentPoly",
    "LawrenceSpace",
    "SparseVector",
    "SpecializationSpec",
    "apply_braid",
    "class_E",
    "coloured_alexander",
    "coloured_jones",
    "compute_invariant",
    "cyclotomic_polynomial",
    "enumerate_basis",
    "equal_up_to_unit",
    "intersection_I",
    "lambda_invariant",
    "markov_variants",
    "pair_with_G",
    "parse_braid",
    "poly_from_json",
    "poly_to_json",
    "specialize",
    "state_sum_S",
]

__version__ = "1.0.0"
