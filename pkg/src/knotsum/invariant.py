"""The state-sum pipeline: from a braid word to the three-variable invariant.

For a braid on n strands and a colour N, the computation runs entirely
inside the code-sequence module with 2n-1 punctures and (n-1)(N-1) points:

1. build the start class: the sum over indices i_1, ..., i_{n-1} in
   {0, ..., N-1} of d^(i_1+...+i_{n-1}) times the basis class indexed by
   (0, i_1, ..., i_{n-1}, N-1-i_{n-1}, ..., N-1-i_1);
2. act by the braid, extended by n-1 identity strands;
3. extract the sum of coefficients over the symmetric index set (indices
   (0, j_1, ..., j_{2n-2}) with j_i + j_{2n-1-i} = N-1), which realises the
   pairing with the dual class as a Kronecker-delta evaluation;
4. normalise: multiplying by u^(n-1-w) (w the writhe) gives the
   three-variable polynomial in Z[u^±1, x^±1, d^±1], whose generic and
   root-of-unity specialisations are the N-th coloured Jones polynomial
   and the N-th coloured Alexander invariant of the closure.

Step 3 uses the reduced pairing; the direct evaluation in the doubled disc
equals x^n times it, which ``state_sum_S`` exposes as bookkeeping.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import conventions
from .braid import BraidWord, extend_by_identity
from .lawrence import (
    LawrenceSpace,
    SparseVector,
    SpaceMismatchError,
    apply_braid,
    enumerate_basis,
)
from .ring import (
    VARS_Q,
    VARS_S,
    VARS_UXD,
    VARS_XD,
    LaurentPoly,
    SpecializationSpec,
    poly_to_json,
    specialize,
)


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


# ---------------------------------------------------------------------------
# Symmetric indices and the two building blocks
# ---------------------------------------------------------------------------

class SymmetricIndexSet:
    """Indices (0, j_1, ..., j_{2n-2}) with j_i = N-1-j_{2n-1-i}; N^(n-1) members."""

    __slots__ = ("n", "colour", "members")

    def __init__(self, n: int, colour: int):
        members = []
        for tail in itertools.product(range(colour), repeat=n - 1):
            mirror = tuple(colour - 1 - i for i in reversed(tail))
            members.append((0,) + tail + mirror)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "colour", colour)
        object.__setattr__(self, "members", tuple(members))

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricIndexSet is immutable")

    def __contains__(self, e):
        e = tuple(e)
        if len(e) != 2 * self.n - 1 or e[0] != 0:
            return False
        return all(e[i] + e[2 * self.n - 1 - i] == self.colour - 1
                   for i in range(1, self.n))

    def __len__(self):
        return len(self.members)


def state_space(n: int, colour: int) -> LawrenceSpace:
    """The module carrying the state sum: 2n-1 punctures, (n-1)(N-1) points."""
    return enumerate_basis(2 * n - 1, (n - 1) * (colour - 1))


def class_E(n: int, colour: int) -> SparseVector:
    """Start class: sum of d^(sum i_k) times the symmetric basis classes."""
    if n < 1 or colour < 1:
        raise ValueError("need n >= 1 and colour >= 1")
    space = state_space(n, colour)
    entries = {}
    for e in SymmetricIndexSet(n, colour).members:
        weight = sum(e[1:n])
        entries[e] = LaurentPoly.monomial(VARS_XD, (0, weight))
    return SparseVector(space, entries)


def pair_with_G(v: SparseVector, n: int, colour: int) -> LaurentPoly:
    """Kronecker-delta pairing: the sum of coefficients over symmetric indices."""
    if v.space != state_space(n, colour):
        raise SpaceMismatchError(
            f"vector lives in {v.space!r}, expected the "
            f"({2 * n - 1}, {(n - 1) * (colour - 1)}) module")
    total = LaurentPoly.zero(VARS_XD)
    for e in SymmetricIndexSet(n, colour).members:
        entry = v.entries.get(e)
        if entry is not None:
            total = total + entry
    return total


# ---------------------------------------------------------------------------
# The invariant and its specialisations
# ---------------------------------------------------------------------------

def intersection_I(b: BraidWord, colour: int) -> LaurentPoly:
    """Pairing of the braid image of the start class with the dual class."""
    n = b.strands
    extended = extend_by_identity(b, n - 1)
    return pair_with_G(apply_braid(extended, class_E(n, colour)), n, colour)


def state_sum_S(b: BraidWord, colour: int) -> LaurentPoly:
    """The embedded-curve state sum; equals x^n times ``intersection_I``."""
    xn = LaurentPoly.monomial(VARS_XD, (b.strands, 0))
    return xn * intersection_I(b, colour)


def lambda_invariant(b: BraidWord, colour: int) -> LaurentPoly:
    """Writhe-corrected three-variable polynomial u^(n-1-w) x^(-n) S."""
    n = b.strands
    inner = intersection_I(b, colour).embed(VARS_UXD)
    correction = LaurentPoly.monomial(VARS_UXD, (n - 1 - b.writhe, 0, 0))
    return correction * inner


def _require_knot(b: BraidWord):
    if not b.is_knot_closure():
        raise NotAKnotError(
            f"closure of '{b.to_text()}' on {b.strands} strands is not a knot")


def coloured_jones(b: BraidWord, colour: int) -> LaurentPoly:
    """The N-th coloured Jones polynomial of the closure (generic q)."""
    _require_knot(b)
    if colour < 1:
        raise ValueError("colour must be >= 1")
    return specialize(lambda_invariant(b, colour), SpecializationSpec.jones(colour))


def coloured_alexander(b: BraidWord, colour: int) -> LaurentPoly:
    """The N-th coloured Alexander invariant of the closure (q at a 2N-th root)."""
    _require_knot(b)
    if colour < 2:
        raise ValueError("colour must be >= 2 for the root-of-unity invariant")
    return specialize(lambda_invariant(b, colour), SpecializationSpec.ado(colour))


# ---------------------------------------------------------------------------
# Bundled result
# ---------------------------------------------------------------------------

@dataclass
class InvariantResult:
    braid: BraidWord
    colour: int
    lambda_poly: LaurentPoly
    jones: LaurentPoly | None
    ado: LaurentPoly | None
    basis_dim: int
    ms: float | None = None

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            "braid": {"strands": self.braid.strands, "word": list(self.braid.letters)},
            "N": self.colour,
            "lambda": poly_to_json(self.lambda_poly),
            "jones": poly_to_json(self.jones) if self.jones is not None else None,
            "ado": poly_to_json(self.ado) if self.ado is not None else None,
            "conventions": conventions.summary(),
            "dims": {"basis": self.basis_dim},
            "ms": self.ms if include_timing else None,
        }


def compute_invariant(b: BraidWord, colour: int,
                      want=("lambda", "jones", "ado")) -> InvariantResult:
    """Compute the three-variable polynomial once and specialise as requested."""
    start = time.perf_counter()
    lam = lambda_invariant(b, colour)
    jones = ado = None
    if "jones" in want:
        _require_knot(b)
        jones = specialize(lam, SpecializationSpec.jones(colour))
    if "ado" in want and colour >= 2:
        _require_knot(b)
        ado = specialize(lam, SpecializationSpec.ado(colour))
    ms = (time.perf_counter() - start) * 1000.0
    return InvariantResult(b, colour, lam, jones, ado,
                           state_space(b.strands, colour).dim, ms)
