"""Homological braid-group action on code-sequence bases.

The n-strand braid group acts on a free Z[x^±1, d^±1]-module whose basis is
indexed by code sequences: compositions e = (e_1, ..., e_n) of m, recording
how many configuration points sit on the segment towards each puncture of
the disc.  The variable x records winding around punctures, d records point
exchanges.

The elementary crossing between strands i and i+1 acts locally: a basis
class with adjacent slot values (a, b) is sent to a combination of classes
with slot values (b+k, a-k) for 0 <= k <= a (one-sided transfer), all other
slots untouched, with coefficients given by the quantum braiding of highest
weight modules rewritten in (x, d).  Writing D = d^(-1):

    positive crossing, (a, b) -> (b+k, a-k), 0 <= k <= a:
        x^(k-a) * D^(b(a-k)) * gauss(b+k, k; D)
            * prod_{l=1..k} (1 - x^(-1) D^(a-l))

    inverse crossing, (a, b) -> (b-k, a+k), 0 <= k <= b:
        (-1)^k * x^b * D^(-ab - bk + k(k+1)/2) * gauss(a+k, k; D)
            * prod_{l=1..k} (1 - x^(-1) D^(b-l))

where gauss(m, k; D) is the one-parameter Gaussian binomial.  This rule is
FROZEN configuration data: it is validated, not trusted — the test suite
checks the braid relations exactly, the reduction to the unreduced Burau
matrices at m = 1, and end-to-end agreement with independent quantum-side
oracles before anything downstream is believed.

At m = 1 the rule reduces to the unreduced Burau action with parameter
t = x^(-1):  u_i -> (1-t) u_i + t u_{i+1},  u_{i+1} -> u_i.
"""
from __future__ import annotations

import functools

from .braid import BraidWord
from .ring import VARS_XD, LaurentPoly, poly_to_json


class SpaceMismatchError(ValueError):
    """Vector or braid does not act on / live in the stated module."""


# ---------------------------------------------------------------------------
# Basis enumeration
# ---------------------------------------------------------------------------

def compositions(n: int, m: int):
    """All compositions of m into n nonnegative parts, first part largest first.

    This is the fixed basis order: (n=3, m=1) enumerates to
    (1,0,0), (0,1,0), (0,0,1).
    """
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in compositions(n - 1, m - first):
            yield (first,) + rest


class LawrenceSpace:
    """The code-sequence module for n punctures and m configuration points."""

    __slots__ = ("n", "m", "basis", "index")

    def __init__(self, n: int, m: int):
        if n < 1 or m < 0:
            raise ValueError(f"need n >= 1 and m >= 0, got ({n}, {m})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "basis", tuple(compositions(n, m)))
        object.__setattr__(self, "index", {e: i for i, e in enumerate(self.basis)})

    def __setattr__(self, name, value):
        raise AttributeError("LawrenceSpace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, LawrenceSpace) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"LawrenceSpace(n={self.n}, m={self.m}, dim={self.dim})"


@functools.lru_cache(maxsize=None)
def enumerate_basis(n: int, m: int) -> LawrenceSpace:
    return LawrenceSpace(n, m)


# ---------------------------------------------------------------------------
# Raw two-variable term dicts: {(x_exp, d_exp): int}.  The hot path works on
# these directly and wraps results into LaurentPoly at the boundary.
# ---------------------------------------------------------------------------

def _xd_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (ax, ad), ac in p.items():
        for (bx, bd), bc in q.items():
            key = (ax + bx, ad + bd)
            v = out.get(key, 0) + ac * bc
            if v:
                out[key] = v
            else:
                del out[key]
    return out


@functools.lru_cache(maxsize=None)
def gaussian_binomial(m: int, k: int) -> tuple[int, ...]:
    """Dense coefficients (low to high in D) of the Gaussian binomial."""
    if k < 0 or k > m:
        return ()
    if k == 0 or k == m:
        return (1,)
    lo = gaussian_binomial(m - 1, k - 1)
    hi = gaussian_binomial(m - 1, k)
    out = [0] * (k * (m - k) + 1)
    for j, c in enumerate(lo):
        out[j] += c
    for j, c in enumerate(hi):
        out[j + k] += c
    return tuple(out)


@functools.lru_cache(maxsize=None)
def slot_transfers(a: int, b: int, positive: bool) -> tuple:
    """Images of adjacent slot values (a, b) under one crossing.

    Returns ((a_new, b_new, coeff), ...) with coeff a raw (x, d) term dict.
    """
    out = []
    if positive:
        for k in range(a + 1):
            coeff = {(k - a, -b * (a - k)): 1}
            gauss = gaussian_binomial(b + k, k)
            coeff = _xd_mul(coeff, {(0, -j): g for j, g in enumerate(gauss) if g})
            for l in range(1, k + 1):
                coeff = _xd_mul(coeff, {(0, 0): 1, (-1, -(a - l)): -1})
            out.append((b + k, a - k, coeff))
    else:
        for k in range(b + 1):
            sign = -1 if k % 2 else 1
            coeff = {(b, a * b + b * k - k * (k + 1) // 2): sign}
            gauss = gaussian_binomial(a + k, k)
            coeff = _xd_mul(coeff, {(0, -j): g for j, g in enumerate(gauss) if g})
            for l in range(1, k + 1):
                coeff = _xd_mul(coeff, {(0, 0): 1, (-1, -(b - l)): -1})
            out.append((b - k, a + k, coeff))
    return tuple(out)


def _apply_letter_raw(vec: dict, letter: int) -> dict:
    """One crossing applied to a raw vector {code tuple: raw term dict}."""
    i = abs(letter) - 1
    positive = letter > 0
    out: dict = {}
    for e, poly in vec.items():
        for a2, b2, coeff in slot_transfers(e[i], e[i + 1], positive):
            e2 = e[:i] + (a2, b2) + e[i + 2:]
            acc = out.get(e2)
            if acc is None:
                acc = {}
                out[e2] = acc
            for pk, pc in poly.items():
                px, pd = pk
                for ck, cc in coeff.items():
                    key = (px + ck[0], pd + ck[1])
                    v = acc.get(key, 0) + pc * cc
                    if v:
                        acc[key] = v
                    else:
                        del acc[key]
    return {e: p for e, p in out.items() if p}


# ---------------------------------------------------------------------------
# Sparse vectors
# ---------------------------------------------------------------------------

class SparseVector:
    """Finitely supported map from code sequences to Z[x^±1, d^±1]."""

    __slots__ = ("space", "entries")

    def __init__(self, space: LawrenceSpace, entries=None):
        clean = {}
        for e, poly in (entries or {}).items():
            e = tuple(e)
            if e not in space.index:
                raise SpaceMismatchError(f"{e} is not a code sequence in {space!r}")
            if not isinstance(poly, LaurentPoly):
                poly = LaurentPoly(VARS_XD, poly)
            if poly.vars != VARS_XD or poly.order is not None:
                raise SpaceMismatchError("entries must be integer polynomials in (x, d)")
            if not poly.is_zero():
                clean[e] = poly
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparseVector is immutable")

    @classmethod
    def basis_vector(cls, space: LawrenceSpace, e) -> SparseVector:
        return cls(space, {tuple(e): LaurentPoly.one(VARS_XD)})

    def coefficient(self, e) -> LaurentPoly:
        return self.entries.get(tuple(e), LaurentPoly.zero(VARS_XD))

    def support(self):
        return set(self.entries)

    def scale(self, poly: LaurentPoly) -> SparseVector:
        """Multiply by a scalar from Z[x^±1, d^±1] (the deck action when the
        scalar is a monomial)."""
        return SparseVector(self.space, {e: p * poly for e, p in self.entries.items()})

    def __add__(self, other: SparseVector) -> SparseVector:
        if self.space != other.space:
            raise SpaceMismatchError("cannot add vectors from different spaces")
        entries = dict(self.entries)
        for e, p in other.entries.items():
            entries[e] = entries[e] + p if e in entries else p
        return SparseVector(self.space, entries)

    def __eq__(self, other):
        return (isinstance(other, SparseVector) and self.space == other.space
                and self.entries == other.entries)

    __hash__ = None

    def __repr__(self):
        inside = " + ".join(f"({p})*U{e}" for e, p in sorted(self.entries.items()))
        return f"SparseVector[{inside or '0'}]"


def apply_braid(b: BraidWord, v: SparseVector) -> SparseVector:
    """Left-to-right application of the crossing rule for each letter of b."""
    if b.strands != v.space.n:
        raise SpaceMismatchError(
            f"braid on {b.strands} strands cannot act on {v.space!r}")
    raw = {e: p.terms for e, p in v.entries.items()}
    for letter in b.letters:
        raw = _apply_letter_raw(raw, letter)
    return SparseVector(v.space, {e: LaurentPoly(VARS_XD, p) for e, p in raw.items()})


# ---------------------------------------------------------------------------
# Explicit matrices (tests, dumps, regression fixtures)
# ---------------------------------------------------------------------------

class SparseMat:
    """Square matrix over Z[x^±1, d^±1], stored column-major by basis index.

    cols[j] maps row index -> entry, and holds the image of basis vector j.
    """

    __slots__ = ("space", "cols")

    def __init__(self, space: LawrenceSpace, cols):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "cols", tuple(
            {r: p for r, p in col.items() if not p.is_zero()} for col in cols))

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    @classmethod
    def identity(cls, space: LawrenceSpace) -> SparseMat:
        one = LaurentPoly.one(VARS_XD)
        return cls(space, [{j: one} for j in range(space.dim)])

    def entry(self, row: int, col: int) -> LaurentPoly:
        return self.cols[col].get(row, LaurentPoly.zero(VARS_XD))

    def apply(self, v: SparseVector) -> SparseVector:
        index = self.space.index
        basis = self.space.basis
        acc: dict = {}
        for e, p in v.entries.items():
            for r, q in self.cols[index[e]].items():
                er = basis[r]
                acc[er] = acc[er] + p * q if er in acc else p * q
        return SparseVector(self.space, acc)

    def __mul__(self, other: SparseMat) -> SparseMat:
        """Composition: (self * other) acts by other first, then self."""
        if self.space != other.space:
            raise SpaceMismatchError("matrix spaces differ")
        cols = []
        for col in other.cols:
            acc: dict = {}
            for r, p in col.items():
                for rr, q in self.cols[r].items():
                    acc[rr] = acc[rr] + p * q if rr in acc else p * q
            cols.append(acc)
        return SparseMat(self.space, cols)

    def __eq__(self, other):
        return (isinstance(other, SparseMat) and self.space == other.space
                and self.cols == other.cols)

    __hash__ = None

    def is_identity(self) -> bool:
        return self == SparseMat.identity(self.space)

    def to_json(self) -> dict:
        entries = []
        for j, col in enumerate(self.cols):
            for r in sorted(col):
                entries.append([r, j, poly_to_json(col[r])])
        return {"n": self.space.n, "m": self.space.m,
                "basis": [list(e) for e in self.space.basis],
                "entries": entries}


@functools.lru_cache(maxsize=None)
def _generator_matrix(n: int, m: int, i: int, inverse: bool) -> SparseMat:
    space = enumerate_basis(n, m)
    cols = []
    for e in space.basis:
        letter = -i if inverse else i
        raw = _apply_letter_raw({e: {(0, 0): 1}}, letter)
        cols.append({space.index[e2]: LaurentPoly(VARS_XD, p) for e2, p in raw.items()})
    return SparseMat(space, cols)


def generator_matrix(space: LawrenceSpace, i: int, inverse: bool = False) -> SparseMat:
    """Matrix of the i-th crossing (or its inverse) in the code-sequence basis."""
    if not 1 <= i <= space.n - 1:
        raise ValueError(f"generator index {i} out of range for n={space.n}")
    return _generator_matrix(space.n, space.m, i, inverse)


def matrix_of_word(b: BraidWord, space: LawrenceSpace) -> SparseMat:
    """Product of generator matrices matching apply_braid's composition order."""
    if b.strands != space.n:
        raise SpaceMismatchError(
            f"braid on {b.strands} strands cannot act on {space!r}")
    result = SparseMat.identity(space)
    for letter in b.letters:
        result = generator_matrix(space, abs(letter), letter < 0) * result
    return result
