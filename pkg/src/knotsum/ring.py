"""Exact coefficient arithmetic for braid-closure invariants.

Multivariate Laurent polynomials with integer or cyclotomic-integer
coefficients, kept in canonical form (no zero coefficient is ever stored),
together with the ring morphisms that specialise the three-variable value
ring Z[u^±1, x^±1, d^±1] onto the value rings of the two quantum invariants:

* generic specialisation (integer weight ``lam``):
      u -> q^(c*lam),   x -> q^(2*lam),   d -> q^(-2)
  landing in Z[q^±1];

* root-of-unity specialisation (formal weight, order 2N):
      u -> s^c,   x -> s^2,   d -> zeta^(-2),   zeta = exp(2*pi*i/(2N)),
  landing in Z[zeta][s^±1], where s is an independent formal variable
  standing for q^lam.

Everything is exact integer arithmetic.  There is no floating point, and
the only polynomial division used is the monic division that builds
cyclotomic polynomials.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass


class RingMismatchError(ValueError):
    """Operands live over different variable sets or coefficient rings."""


class InvalidOrderError(ValueError):
    """Cyclotomic order must be an integer >= 2."""


class InvalidSpecializationError(ValueError):
    """Exactly one of (q, lambda) must be formal in a specialisation."""


# ---------------------------------------------------------------------------
# Cyclotomic integers
# ---------------------------------------------------------------------------

def _monic_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide dense integer polynomials (low-to-high), ``den`` monic."""
    assert den and den[-1] == 1
    num = list(num)
    quo = [0] * max(len(num) - len(den) + 1, 0)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            quo[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quo, num


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Dense coefficients (low-to-high) of the ``order``-th cyclotomic polynomial.

    Computed by the divisor recurrence: x^n - 1 divided by Phi_d for every
    proper divisor d of n.  Works for any order >= 1.
    """
    if order < 1:
        raise InvalidOrderError(f"cyclotomic order must be >= 1, got {order}")
    poly = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d == 0:
            poly, rem = _monic_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def cyclotomic_degree(order: int) -> int:
    """Euler phi of ``order``: the rank of Z[zeta_order] over Z."""
    return len(cyclotomic_polynomial(order)) - 1


class CyclotomicInt:
    """An element of Z[zeta_order] in the power basis 1, zeta, ..., zeta^(phi-1).

    Always stored reduced modulo the ``order``-th cyclotomic polynomial, as a
    fixed-length coefficient tuple, so equality and hashing are structural.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if not isinstance(order, int) or order < 2:
            raise InvalidOrderError(f"cyclotomic order must be >= 2, got {order}")
        phi = cyclotomic_degree(order)
        dense = list(coeffs)
        if len(dense) > phi:
            _, dense = _monic_divmod(dense, list(cyclotomic_polynomial(order)))
        dense += [0] * (phi - len(dense))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(dense))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    @classmethod
    def from_int(cls, order: int, n: int) -> CyclotomicInt:
        return cls(order, (n,))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CyclotomicInt:
        """zeta_order raised to ``power`` (any integer; zeta has order ``order``)."""
        k = power % order
        return cls(order, (0,) * k + (1,))

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.order, other)
        if isinstance(other, CyclotomicInt):
            if other.order != self.order:
                raise RingMismatchError(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other
        raise TypeError(f"cannot coerce {other!r} into Z[zeta_{self.order}]")

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(self.order,
                             tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        prod[i + j] += ca * cb
        return CyclotomicInt(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of cyclotomic integers are not supported")
        result = CyclotomicInt.from_int(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def as_int(self):
        """The rational integer this element equals, or None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_int() == other
        if isinstance(other, CyclotomicInt):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        n = self.as_int()
        if n is not None:
            return hash(n)
        return hash((self.order, self.coeffs))

    def galois(self, j: int) -> CyclotomicInt:
        """Apply the automorphism zeta -> zeta^j (j must be prime to the order)."""
        dense = [0] * (self.order * max(1, len(self.coeffs)))
        for i, c in enumerate(self.coeffs):
            if c:
                dense[(i * j) % self.order] += c
        return CyclotomicInt(self.order, dense)

    def to_token(self) -> str:
        """Serialisation used inside polynomial JSON: ``"<order>:c0,c1,..."``."""
        return f"{self.order}:" + ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_token(cls, token: str) -> CyclotomicInt:
        head, _, tail = token.partition(":")
        return cls(int(head), tuple(int(c) for c in tail.split(",")))

    def __str__(self):
        n = self.as_int()
        if n is not None:
            return str(n)
        out = ""
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            var = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            piece = mag + ("*" if mag and var else "") + var
            if not out:
                out = ("-" if c < 0 else "") + piece
            else:
                out += (" - " if c < 0 else " + ") + piece
        return out or "0"

    def __repr__(self):
        return f"CyclotomicInt({self.order}, {self.coeffs})"


def coeff_is_zero(c) -> bool:
    if isinstance(c, int):
        return c == 0
    return c.is_zero()


def cyclotomic_reduce(order: int, coeffs) -> CyclotomicInt:
    """Reduce an integer polynomial in zeta (dense, low-to-high) mod Phi_order."""
    return CyclotomicInt(order, tuple(coeffs))


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

VARS_UXD = ("u", "x", "d")
VARS_XD = ("x", "d")
VARS_Q = ("q",)
VARS_S = ("s",)
VARS_T = ("t",)


class LaurentPoly:
    """Multivariate Laurent polynomial in canonical form.

    ``vars`` is the ordered variable tuple, ``order`` is None for integer
    coefficients or the cyclotomic order for Z[zeta_order] coefficients, and
    ``terms`` maps exponent tuples (one integer per variable, negatives
    allowed) to nonzero coefficients.  Instances are immutable by
    convention: ``terms`` must never be mutated after construction.
    """

    __slots__ = ("vars", "order", "terms")

    def __init__(self, vars: tuple[str, ...], terms=None, order: int | None = None):
        vars = tuple(vars)
        arity = len(vars)
        clean: dict[tuple[int, ...], object] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise RingMismatchError(
                    f"exponent tuple {exps} does not match variables {vars}")
            if order is not None and isinstance(coeff, int):
                coeff = CyclotomicInt.from_int(order, coeff)
            if isinstance(coeff, CyclotomicInt):
                if order is None or coeff.order != order:
                    raise RingMismatchError(
                        f"coefficient order {coeff.order} does not match ring order {order}")
            if not coeff_is_zero(coeff):
                clean[exps] = coeff
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars, order=None) -> LaurentPoly:
        return cls(vars, {}, order)

    @classmethod
    def one(cls, vars, order=None) -> LaurentPoly:
        return cls.monomial(vars, (0,) * len(tuple(vars)), 1, order)

    @classmethod
    def monomial(cls, vars, exps, coeff=1, order=None) -> LaurentPoly:
        return cls(vars, {tuple(exps): coeff}, order)

    @classmethod
    def variable(cls, vars, name: str, power: int = 1, order=None) -> LaurentPoly:
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls.monomial(vars, tuple(exps), 1, order)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self):
        """The constant this polynomial equals, or None if non-constant."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((exps, coeff),) = self.terms.items()
            if all(e == 0 for e in exps):
                return coeff
        return None

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self, reverse: bool = False):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=reverse)

    def _compat(self, other: LaurentPoly):
        if self.vars != other.vars or self.order != other.order:
            raise RingMismatchError(
                f"ring mismatch: {self.vars}/{self.order} vs {other.vars}/{other.order}")

    # -- arithmetic ----------------------------------------------------------

    def _wrap_scalar(self, c):
        if isinstance(c, int) and self.order is not None:
            return CyclotomicInt.from_int(self.order, c)
        return c

    def __add__(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            other = LaurentPoly.monomial(self.vars, (0,) * len(self.vars), other, self.order)
        self._compat(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if coeff_is_zero(new):
                terms.pop(exps, None)
            else:
                terms[exps] = new
        return LaurentPoly(self.vars, terms, self.order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            other = LaurentPoly.monomial(self.vars, (0,) * len(self.vars), other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            c = self._wrap_scalar(other)
            if coeff_is_zero(c):
                return LaurentPoly.zero(self.vars, self.order)
            return LaurentPoly(self.vars,
                               {e: co * c for e, co in self.terms.items()}, self.order)
        self._compat(other)
        acc: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = acc.get(key, 0) + c1 * c2
                if coeff_is_zero(new):
                    acc.pop(key, None)
                else:
                    acc[key] = new
        return LaurentPoly(self.vars, acc, self.order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if self.is_monomial():
                ((exps, coeff),) = self.terms.items()
                if coeff == 1:
                    return LaurentPoly.monomial(
                        self.vars, tuple(e * n for e in exps), 1, self.order)
            raise ValueError("negative powers only defined for coefficient-1 monomials")
        result = LaurentPoly.one(self.vars, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            cv = self.constant_value()
            return cv is not None and cv == other
        if isinstance(other, LaurentPoly):
            return (self.vars == other.vars and self.order == other.order
                    and self.terms == other.terms)
        return NotImplemented

    __hash__ = None  # mutable-looking container; not intended as a dict key

    # -- ring changes ---------------------------------------------------------

    def substitute(self, new_vars, images, order=None) -> LaurentPoly:
        """Monomial substitution: each variable maps to a unit monomial.

        ``images`` maps a variable name to ``(sign, zeta_exp, exps)`` meaning
        sign * zeta^zeta_exp * (monomial with exponents ``exps`` in
        ``new_vars``).  Integer coefficients pass through (wrapped into the
        target cyclotomic ring when ``order`` is given); existing cyclotomic
        coefficients require the same target order.
        """
        new_vars = tuple(new_vars)
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise RingMismatchError(f"no image given for variables {missing}")
        if self.order is not None and order != self.order:
            raise RingMismatchError("cannot change cyclotomic order during substitution")
        terms: dict[tuple[int, ...], object] = {}
        for exps, coeff in self.terms.items():
            new_exp = [0] * len(new_vars)
            sign = 1
            zexp = 0
            for var, e in zip(self.vars, exps):
                if e == 0:
                    continue
                s, z, mono = images[var]
                if s == -1 and e % 2:
                    sign = -sign
                zexp += z * e
                for i, m in enumerate(mono):
                    new_exp[i] += m * e
            new_coeff = coeff * sign
            if zexp:
                if order is None:
                    raise RingMismatchError("zeta image requires a cyclotomic target order")
                new_coeff = CyclotomicInt.zeta(order, zexp) * new_coeff
            elif order is not None and isinstance(new_coeff, int):
                new_coeff = CyclotomicInt.from_int(order, new_coeff)
            key = tuple(new_exp)
            total = terms.get(key, 0) + new_coeff
            if coeff_is_zero(total):
                terms.pop(key, None)
            else:
                terms[key] = total
        return LaurentPoly(new_vars, terms, order)

    def map_coefficients(self, fn) -> LaurentPoly:
        return LaurentPoly(self.vars, {e: fn(c) for e, c in self.terms.items()}, self.order)

    def embed(self, new_vars) -> LaurentPoly:
        """Re-express over a larger variable set containing self.vars."""
        images = {v: (1, 0, tuple(1 if w == v else 0 for w in new_vars))
                  for v in self.vars}
        return self.substitute(new_vars, images, self.order)

    # -- rendering -------------------------------------------------------------

    def _term_str(self, exps, coeff, latex: bool) -> str:
        pieces = []
        for v, e in zip(self.vars, exps):
            if e == 0:
                continue
            if e == 1:
                pieces.append(v)
            else:
                pieces.append(f"{v}^{{{e}}}" if latex else f"{v}^{e}")
        sep = " " if latex else "*"
        mono = sep.join(pieces)
        cstr = str(coeff)
        if isinstance(coeff, CyclotomicInt) and coeff.as_int() is None:
            cstr = f"({cstr})"
        if mono and cstr == "1":
            return mono
        if mono and cstr == "-1":
            return f"-{mono}"
        if mono:
            return f"{cstr}{sep}{mono}"
        return cstr

    def to_text(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for exps, coeff in self.sorted_terms(reverse=True):
            t = self._term_str(exps, coeff, latex)
            if out:
                out.append(f"- {t[1:]}" if t.startswith("-") else f"+ {t}")
            else:
                out.append(t)
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly[{','.join(self.vars)}]('{self}')"


# ---------------------------------------------------------------------------
# JSON form: {"vars": [...], "terms": [{"e": [...], "c": "..."}, ...]}
# Terms are sorted lexicographically by exponent tuple; bit-exact round trip.
# ---------------------------------------------------------------------------

def poly_to_json(p: LaurentPoly) -> dict:
    terms = []
    for exps, coeff in p.sorted_terms():
        token = coeff.to_token() if isinstance(coeff, CyclotomicInt) else str(coeff)
        terms.append({"e": list(exps), "c": token})
    doc = {"vars": list(p.vars), "terms": terms}
    if p.order is not None:
        doc["order"] = p.order
    return doc


def poly_from_json(doc: dict) -> LaurentPoly:
    vars = tuple(doc["vars"])
    order = doc.get("order")
    terms = {}
    for item in doc["terms"]:
        token = item["c"]
        if ":" in token:
            coeff = CyclotomicInt.from_token(token)
            if order is None:
                order = coeff.order
        else:
            coeff = int(token)
        terms[tuple(item["e"])] = coeff
    return LaurentPoly(vars, terms, order)


# ---------------------------------------------------------------------------
# Comparison up to units
# ---------------------------------------------------------------------------

def _unit_candidates(order: int | None):
    if order is None:
        return (1, -1)
    units = []
    for j in range(order):
        z = CyclotomicInt.zeta(order, j)
        units.append(z)
        units.append(-z)
    return tuple(units)


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly):
    """Decide whether a = eps * m * b with eps a unit and m a monomial.

    Units are +-1 over the integers and +-zeta^j over a cyclotomic ring (the
    torsion units, which is what changes of lift and framing can produce).
    Returns ``(True, (eps, monomial))`` with the witness, or ``(False, None)``.
    """
    a._compat(b)
    if a.is_zero() and b.is_zero():
        return True, (1, LaurentPoly.one(a.vars, a.order))
    if a.is_zero() != b.is_zero() or len(a.terms) != len(b.terms):
        return False, None
    ta = a.sorted_terms()
    tb = b.sorted_terms()
    shift = tuple(ea - eb for ea, eb in zip(ta[0][0], tb[0][0]))
    for (ea, _), (eb, _) in zip(ta, tb):
        if tuple(x - y for x, y in zip(ea, eb)) != shift:
            return False, None
    mono = LaurentPoly.monomial(a.vars, shift, 1, a.order)
    for eps in _unit_candidates(a.order):
        if all(ca == eps * cb for (_, ca), (_, cb) in zip(ta, tb)):
            return True, (eps, mono)
    return False, None


# ---------------------------------------------------------------------------
# Specialisations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecializationSpec:
    """The data (c, q-target, lambda-target) of a coefficient morphism.

    ``root_order`` is None when q stays formal (then ``lam`` must be the
    integer weight) and equals 2N when q is sent to the primitive 2N-th root
    of unity (then ``lam`` must be None and the weight stays formal, written
    through the variable s).
    """

    c: int
    root_order: int | None = None
    lam: int | None = None

    def __post_init__(self):
        if (self.root_order is None) == (self.lam is None):
            raise InvalidSpecializationError(
                "exactly one of q and lambda must be formal "
                f"(root_order={self.root_order}, lam={self.lam})")
        if self.root_order is not None and self.root_order < 2:
            raise InvalidOrderError(f"root order must be >= 2, got {self.root_order}")

    @classmethod
    def jones(cls, colour: int, c: int = 1) -> SpecializationSpec:
        """Generic-q specialisation at integer weight colour - 1."""
        return cls(c=c, root_order=None, lam=colour - 1)

    @classmethod
    def ado(cls, colour: int, c: int | None = None) -> SpecializationSpec:
        """Root-of-unity specialisation at order 2*colour with formal weight."""
        if c is None:
            c = 1 - colour
        return cls(c=c, root_order=2 * colour, lam=None)


def specialize(p: LaurentPoly, spec: SpecializationSpec) -> LaurentPoly:
    """Apply u -> q^(c*lam), x -> q^(2*lam), d -> q^(-2) (generic case) or
    u -> s^c, x -> s^2, d -> zeta^(-2) (root-of-unity case) to a polynomial
    over Z[u^±1, x^±1, d^±1].  A ring homomorphism in both cases."""
    if p.vars != VARS_UXD or p.order is not None:
        raise RingMismatchError(f"specialize expects an integer polynomial in {VARS_UXD}")
    terms: dict[tuple[int, ...], object] = {}
    if spec.root_order is None:
        lam = spec.lam
        for (eu, ex, ed), coeff in p.terms.items():
            key = (spec.c * lam * eu + 2 * lam * ex - 2 * ed,)
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return LaurentPoly(VARS_Q, terms)
    order = spec.root_order
    for (eu, ex, ed), coeff in p.terms.items():
        key = (spec.c * eu + 2 * ex,)
        new = terms.get(key, 0) + CyclotomicInt.zeta(order, -2 * ed) * coeff
        if coeff_is_zero(new):
            terms.pop(key, None)
        else:
            terms[key] = new
    return LaurentPoly(VARS_S, terms, order)
