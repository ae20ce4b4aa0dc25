"""Homogeneous polynomials, differential operators and the apolarity action.

Coefficients live either in a :class:`~ermcodes.galois.BaseField` (ints) or in
an :class:`~ermcodes.galois.ExtField`.  Monomials of ``S_{n,d}`` are ordered
lexicographically from ``x1^d`` down to ``xn^d``; every matrix produced here
uses that order.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Any, Iterable, Mapping, Sequence

from . import linalg
from .errors import DegreeMismatch, DomainError
from .galois import ExtField, LBasis

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[Exponent, ...]:
    """All exponent vectors of length ``n`` summing to ``d``, lex descending."""
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict[Exponent, int]:
    return {t: i for i, t in enumerate(monomials(n, d))}


def dim_S(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def _falling(a: int, b: int) -> int:
    """a (a-1) ... (a-b+1)."""
    out = 1
    for k in range(b):
        out *= a - k
    return out


def _factorial_weight(t: Exponent) -> int:
    out = 1
    for a in t:
        out *= _falling(a, a)
    return out


def common_field(a, b):
    """The smaller field containing both coefficient domains."""
    if a == b:
        return a
    if isinstance(a, ExtField) and a.base == b:
        return a
    if isinstance(b, ExtField) and b.base == a:
        return b
    raise DomainError(f"incompatible coefficient fields {a!r} and {b!r}")


class HomogPoly:
    """A homogeneous polynomial of degree ``d`` in ``n`` variables.

    ``coeffs`` maps exponent tuples to nonzero field elements.
    """

    __slots__ = ("n", "d", "field", "coeffs")
    _var = "x"

    def __init__(self, n: int, d: int, field, coeffs: Mapping[Exponent, Any] | None = None):
        self.n = n
        self.d = d
        self.field = field
        clean = {}
        if coeffs:
            for t, c in coeffs.items():
                t = tuple(t)
                if len(t) != n or sum(t) != d or min(t, default=0) < 0:
                    raise DegreeMismatch(f"exponent {t} does not belong to S_{{{n},{d}}}")
                if not field.is_zero(c):
                    clean[t] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, n, d, field, coeffs):
        obj = cls.__new__(cls)
        obj.n, obj.d, obj.field, obj.coeffs = n, d, field, coeffs
        return obj

    @classmethod
    def zero(cls, n: int, d: int, field):
        return cls._raw(n, d, field, {})

    @classmethod
    def monomial(cls, t: Sequence[int], field, c=None):
        t = tuple(t)
        return cls(len(t), sum(t), field, {t: field.one if c is None else c})

    @classmethod
    def from_vector(cls, vec: Sequence[Any], n: int, d: int, field):
        return cls(n, d, field, dict(zip(monomials(n, d), vec)))

    def to_vector(self) -> list:
        z = self.field.zero
        return [self.coeffs.get(t, z) for t in monomials(self.n, self.d)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[Exponent, Any]]:
        """Nonzero terms in lex-descending monomial order."""
        idx = monomial_index(self.n, self.d)
        return sorted(self.coeffs.items(), key=lambda kv: idx[kv[0]])

    def promote(self, field) -> "HomogPoly":
        """The same polynomial with coefficients in ``field`` ⊇ current field."""
        if field == self.field:
            return self
        if isinstance(field, ExtField) and field.base == self.field:
            return self._with({t: field.embed(c) for t, c in self.coeffs.items()}, field)
        raise DomainError(f"cannot promote {self.field!r} to {field!r}")

    def restrict(self, base) -> "HomogPoly":
        """Coefficients pushed down into the base field (they must lie there)."""
        if base == self.field:
            return self
        ext = self.field
        return self._with({t: ext.to_base(c) for t, c in self.coeffs.items()}, base)

    def _with(self, coeffs, field=None):
        return type(self)._raw(self.n, self.d, self.field if field is None else field, coeffs)

    def _align(self, other):
        if (self.n, self.d) != (other.n, other.d):
            raise DegreeMismatch(f"S_{{{self.n},{self.d}}} vs S_{{{other.n},{other.d}}}")
        F = common_field(self.field, other.field)
        return self.promote(F), other.promote(F), F

    def __add__(self, other):
        a, b, F = self._align(other)
        out = dict(a.coeffs)
        for t, c in b.coeffs.items():
            v = F.add(out[t], c) if t in out else c
            if F.is_zero(v):
                out.pop(t, None)
            else:
                out[t] = v
        return a._with(out, F)

    def __neg__(self):
        F = self.field
        return self._with({t: F.neg(c) for t, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HomogPoly":
        """Multiply by a scalar of the coefficient field (or its base)."""
        F = self.field
        if isinstance(F, ExtField) and not hasattr(c, "coords"):
            c = F.embed(c)
        elif not isinstance(F, ExtField) and hasattr(c, "coords"):
            return self.promote(c.field).scale(c)
        if F.is_zero(c):
            return self._with({})
        return self._with({t: F.mul(c, v) for t, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            return self.scale(other)
        if self.n != other.n:
            raise DegreeMismatch("variable counts differ")
        F = common_field(self.field, other.field)
        a, b = self.promote(F), other.promote(F)
        out: dict = {}
        for t, c in a.coeffs.items():
            for u, e in b.coeffs.items():
                key = tuple(x + y for x, y in zip(t, u))
                prod = F.mul(c, e)
                out[key] = F.add(out[key], prod) if key in out else prod
        out = {t: c for t, c in out.items() if not F.is_zero(c)}
        return type(self)._raw(self.n, self.d + other.d, F, out)

    def __pow__(self, k: int):
        result = type(self).monomial((0,) * self.n, self.field)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if (self.n, self.d) != (other.n, other.d):
            return False
        try:
            a, b, _ = self._align(other)
        except DomainError:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        from .formats import poly_to_text

        return f"{type(self).__name__}({poly_to_text(self)})"


class DiffOp(HomogPoly):
    """A homogeneous differential operator in ∂_1, …, ∂_n."""

    __slots__ = ()
    _var = "d"


def as_diffop(p: HomogPoly) -> DiffOp:
    return DiffOp._raw(p.n, p.d, p.field, dict(p.coeffs))


# -- the apolarity action ----------------------------------------------------


def apply_diffop(D: HomogPoly, f: HomogPoly) -> HomogPoly:
    """D ∘ f by formal partial differentiation; the result has degree a-b."""
    if D.n != f.n:
        raise DegreeMismatch("variable counts differ")
    if D.d > f.d:
        raise DegreeMismatch(f"operator of degree {D.d} applied to degree {f.d}")
    F = common_field(D.field, f.field)
    if D.field != F:
        D = D.promote(F)
    if f.field != F:
        f = f.promote(F)
    out: dict = {}
    add, mul = F.add, F.mul
    for u, c in D.coeffs.items():
        for t, a in f.coeffs.items():
            if any(x < y for x, y in zip(t, u)):
                continue
            w = 1
            for x, y in zip(t, u):
                w *= _falling(x, y)
            w = F.from_int(w)
            if F.is_zero(w):
                continue
            r = tuple(x - y for x, y in zip(t, u))
            v = mul(mul(c, a), w)
            out[r] = add(out[r], v) if r in out else v
    out = {t: c for t, c in out.items() if not F.is_zero(c)}
    return HomogPoly._raw(f.n, f.d - D.d, F, out)


def pairing(f: HomogPoly, D: HomogPoly):
    """The scalar D ∘ f for operators and polynomials of equal degree."""
    if f.d != D.d or f.n != D.n:
        raise DegreeMismatch("pairing needs equal degree and variable count")
    r = apply_diffop(D, f)
    return r.coeffs.get((0,) * f.n, r.field.zero)


def gram_diagonal(n: int, d: int, field) -> list:
    """pairing(x^t, ∂^t) = t_1! ⋯ t_n! on the lex monomial basis."""
    return [field.from_int(_factorial_weight(t)) for t in monomials(n, d)]


def condition_rows(ops: Iterable[HomogPoly], n: int, d: int, base) -> list[list[int]]:
    """F-linear conditions D ∘ f = 0 on coefficient vectors of f ∈ S_{n,d}(F).

    An operator over L contributes one row per power-basis coordinate.
    """
    mons = monomials(n, d)
    weights = [_factorial_weight(t) for t in mons]
    rows = []
    for D in ops:
        if D.n != n or D.d != d:
            raise DegreeMismatch("operator shape does not match S_{n,d}")
        if isinstance(D.field, ExtField):
            L = D.field
            zero = L.zero
            coords = [D.coeffs.get(t, zero).coords for t in mons]
            for k in range(L.n):
                rows.append([base.mul(c[k], base.from_int(w)) for c, w in zip(coords, weights)])
        else:
            rows.append([base.mul(D.coeffs.get(t, base.zero), base.from_int(w)) for t, w in zip(mons, weights)])
    return rows


def perp_in_S(ops: Sequence[HomogPoly], n: int, d: int, base) -> list[HomogPoly]:
    """RREF basis of {f ∈ S_{n,d}(F) : D ∘ f = 0 for every D in ``ops``}."""
    m = dim_S(n, d)
    rows = condition_rows(ops, n, d, base)
    if not rows:
        basis = linalg.identity(m, base)
    else:
        basis = linalg.nullspace(rows, m, base)
    return [HomogPoly.from_vector(v, n, d, base) for v in basis]


def coeff_decompose(h: HomogPoly, alpha: LBasis) -> list[HomogPoly]:
    """The n polynomials coeff_i(h) over F with h = Σ α_i coeff_i(h)."""
    L = alpha.ext
    F = L.base
    h = h.promote(L)
    parts: list[dict] = [{} for _ in range(L.n)]
    for t, c in h.coeffs.items():
        for i, x in enumerate(alpha.coordinates(c)):
            if not F.is_zero(x):
                parts[i][t] = x
    return [HomogPoly._raw(h.n, h.d, F, part) for part in parts]


def linear_form(v: Sequence[Any], field) -> HomogPoly:
    n = len(v)
    return HomogPoly(n, 1, field, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(v)})


def linear_diffop(v: Sequence[Any], field) -> DiffOp:
    return as_diffop(linear_form(v, field))


def product_of_linear_diffops(vs: Sequence[Sequence[Any]], field) -> DiffOp:
    if not vs:
        raise DomainError("need at least one factor")
    out = linear_form(vs[0], field)
    for v in vs[1:]:
        out = out * linear_form(v, field)
    return as_diffop(out)


def substitute(f: HomogPoly, A: Sequence[Sequence[Any]]) -> HomogPoly:
    """f(x·A), i.e. x_j ↦ Σ_i A_ij x_i."""
    n = f.n
    if len(A) != n or any(len(r) != n for r in A):
        raise DomainError("substitution matrix must be n x n")
    F = f.field
    images = [linear_form([A[i][j] for i in range(n)], F) for j in range(n)]
    powers: dict[tuple[int, int], HomogPoly] = {}

    def power(j: int, k: int) -> HomogPoly:
        if (j, k) not in powers:
            powers[(j, k)] = images[j] ** k
        return powers[(j, k)]

    out = HomogPoly.zero(n, f.d, F)
    for t, c in f.coeffs.items():
        term = HomogPoly.monomial((0,) * n, F, c)
        for j, k in enumerate(t):
            if k:
                term = term * power(j, k)
        out = out + term
    return type(f)._raw(n, f.d, F, out.coeffs)


def catalecticant(f: HomogPoly) -> list[list]:
    """First catalecticant: row i holds ∂_i ∘ f on the lex basis of S_{n,d-1}."""
    n, d, F = f.n, f.d, f.field
    if d < 1:
        raise DegreeMismatch("catalecticant needs degree >= 1")
    idx = monomial_index(n, d - 1)
    C = [[F.zero] * len(idx) for _ in range(n)]
    for t, c in f.coeffs.items():
        for i in range(n):
            if t[i]:
                r = t[:i] + (t[i] - 1,) + t[i + 1 :]
                C[i][idx[r]] = F.add(C[i][idx[r]], F.mul(c, F.from_int(t[i])))
    return C


def catalecticant_map(n: int, d: int) -> list[list[tuple[int, int, int]]]:
    """Sparse description of f ↦ C_f: for each monomial of S_{n,d}, the list of
    (row, column, multiplier) entries it feeds."""
    idx = monomial_index(n, d - 1)
    out = []
    for t in monomials(n, d):
        entries = []
        for i in range(n):
            if t[i]:
                r = t[:i] + (t[i] - 1,) + t[i + 1 :]
                entries.append((i, idx[r], t[i]))
        out.append(entries)
    return out
