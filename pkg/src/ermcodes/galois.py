"""Finite fields F_q and cyclic extensions L = F_{q^n} with their Frobenius.

Base-field elements are plain ints.  For a prime field these are residues
mod p; for F_{p^m} with m > 1 an int encodes the coefficient vector of the
element in base p (constant term in the lowest digit).  Extension elements
are :class:`ExtElement` values holding power-basis coordinates over the base.
"""

from __future__ import annotations

import math
import random
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg
from .errors import DomainError, SingularBasis, TooLarge

# add/mul tables for non-prime base fields are q x q
MAX_TABLE_ORDER = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % k for k in range(3, math.isqrt(p) + 1, 2))


# -- univariate polynomials over an abstract field (low degree first) --------


def _trim(a: list, F) -> list:
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def _poly_sub(a: list, b: list, F) -> list:
    m = max(len(a), len(b))
    a = a + [F.zero] * (m - len(a))
    b = b + [F.zero] * (m - len(b))
    return _trim([F.sub(x, y) for x, y in zip(a, b)], F)


def _poly_mul(a: list, b: list, F) -> list:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out, F)


def _poly_mod(a: list, f: list, F) -> list:
    a = _trim(list(a), F)
    df = len(f) - 1
    lead_inv = F.inv(f[-1])
    while len(a) - 1 >= df:
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, fi))
        a.pop()
        _trim(a, F)
    return a


def _poly_powmod(a: list, e: int, f: list, F) -> list:
    result = [F.one]
    base = _poly_mod(a, f, F)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, F), f, F)
        base = _poly_mod(_poly_mul(base, base, F), f, F)
        e >>= 1
    return result


def _poly_gcd(a: list, b: list, F) -> list:
    a, b = _trim(list(a), F), _trim(list(b), F)
    while b:
        a, b = b, _poly_mod(a, b, F)
    return a


def poly_is_irreducible(f: Sequence, F) -> bool:
    """Ben-Or test: no factor of degree <= deg/2 divides ``f``."""
    f = _trim(list(f), F)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]
    h = x
    for _ in range(n // 2):
        h = _poly_powmod(h, F.q, f, F)
        g = _poly_gcd(f, _poly_sub(h, x, F), F)
        if len(g) > 1:
            return False
    return True


def find_irreducible(F, n: int) -> list:
    """The first monic irreducible degree-``n`` polynomial in counting order.

    Candidates are enumerated with the constant term varying fastest, which
    makes the choice deterministic for every base field.
    """
    if n == 1:
        return [F.zero, F.one]
    elems = list(F.elements())
    for tail in product(elems, repeat=n):
        coeffs = list(reversed(tail))
        if F.is_zero(coeffs[0]):
            continue
        cand = coeffs + [F.one]
        if poly_is_irreducible(cand, F):
            return cand
    raise DomainError(f"no irreducible polynomial of degree {n}")  # pragma: no cover


# -- base field ---------------------------------------------------------------


class BaseField:
    """The finite field F_q with q = p^m."""

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if m < 1:
            raise DomainError("extension degree m must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        self.zero = 0
        self.one = 1
        self.is_prime_field = m == 1
        if m == 1:
            self.modulus = (0, 1)
            self.add = self._add_p
            self.sub = self._sub_p
            self.neg = self._neg_p
            self.mul = self._mul_p
            self.inv = self._inv_p
            return
        if self.q > MAX_TABLE_ORDER:
            raise TooLarge(f"base field of order {self.q} exceeds table limit {MAX_TABLE_ORDER}")
        prime = BaseField(p)
        if modulus is None:
            modulus = find_irreducible(prime, m)
        mod = _trim([c % p for c in modulus], prime)
        if len(mod) != m + 1:
            raise DomainError(f"modulus must have degree {m}")
        lead_inv = pow(mod[-1], -1, p)
        mod = [(c * lead_inv) % p for c in mod]
        if not poly_is_irreducible(mod, prime):
            raise DomainError(f"modulus {mod} is reducible over F_{p}")
        self.modulus = tuple(mod)
        self._build_tables(prime)
        self.add = self._add_t
        self.sub = self._sub_t
        self.neg = self._neg_t
        self.mul = self._mul_t
        self.inv = self._inv_t

    def _build_tables(self, prime: "BaseField") -> None:
        p, m, q = self.p, self.m, self.q
        digits = np.array([[(a // p**i) % p for i in range(m)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        self._add_tab = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).tolist()
        self._neg_tab = (((-digits) % p) @ weights).tolist()

        def encode(coeffs: list) -> int:
            return sum(int(c) * p**i for i, c in enumerate(coeffs))

        mod = list(self.modulus)
        for g in range(2, q):
            gpoly = list(digits[g])
            exp = [1]
            cur = [1]
            for _ in range(q - 2):
                cur = _poly_mod(_poly_mul(cur, gpoly, prime), mod, prime)
                code = encode(cur)
                if code == 1:
                    break
                exp.append(code)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover
            raise DomainError("no primitive element found")
        self._exp = exp
        self._log = [0] * q
        for i, a in enumerate(exp):
            self._log[a] = i

    # prime-field arithmetic
    def _add_p(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _sub_p(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _neg_p(self, a: int) -> int:
        return (-a) % self.p

    def _mul_p(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def _inv_p(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    # table arithmetic
    def _add_t(self, a: int, b: int) -> int:
        return self._add_tab[a][b]

    def _sub_t(self, a: int, b: int) -> int:
        return self._add_tab[a][self._neg_tab[b]]

    def _neg_t(self, a: int) -> int:
        return self._neg_tab[a]

    def _mul_t(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _inv_t(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    @property
    def char(self) -> int:
        return self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def from_int(self, k: int) -> int:
        return k % self.p

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.q))

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.q)

    def spec(self) -> str:
        if self.m == 1:
            return str(self.p)
        return f"{self.p}^{self.m}:" + ",".join(str(c) for c in self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseField) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"BaseField({self.spec()})"


# -- extension field ---------------------------------------------------------


class ExtElement:
    """An element of L in power-basis coordinates (immutable)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: "ExtField", coords: Sequence[int]):
        self.field = field
        self.coords = tuple(coords)

    def _lift(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            return other
        if isinstance(other, int):
            return self.field.embed(self.field.base.from_int(other) if self.field.base.is_prime_field else other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.sub(other, self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.field.neg(self)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, e: int):
        return self.field.pow(self, e)

    def inverse(self) -> "ExtElement":
        return self.field.inv(self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtElement):
            return self.coords == other.coords and self.field == other.field
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


class ExtField:
    """A degree-``n`` extension L of a base field F, with σ = Frob_q^s.

    ``modulus`` lists the coefficients of an irreducible polynomial over F,
    constant term first.  When omitted, :func:`find_irreducible` picks one.
    """

    def __init__(self, base: BaseField, n: int, modulus: Sequence[int] | None = None, s: int = 1):
        if n < 1:
            raise DomainError("extension degree must be >= 1")
        if math.gcd(s, n) != 1:
            raise DomainError(f"Frobenius exponent s={s} is not coprime to n={n}")
        self.base = base
        self.n = n
        self.s = s % n if n > 1 else 0
        self.is_prime_field = False
        F = base
        if modulus is None:
            modulus = find_irreducible(F, n)
        mod = _trim([F.from_int(c) if F.is_prime_field else c for c in modulus], F)
        if len(mod) != n + 1:
            raise DomainError(f"extension modulus must have degree {n}")
        lead_inv = F.inv(mod[-1])
        mod = [F.mul(c, lead_inv) for c in mod]
        if not poly_is_irreducible(mod, F):
            raise DomainError(f"extension modulus {mod} is reducible over {F!r}")
        self.modulus = tuple(mod)
        self._p = F.p if F.is_prime_field else None

        # x^k mod modulus for k = n .. 2n-2
        red = []
        cur = [F.neg(c) for c in mod[:n]]
        for _ in range(n, 2 * n - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [F.zero] + cur[:-1]
            if not F.is_zero(top):
                cur = [F.add(c, F.mul(top, r)) for c, r in zip(cur, red[0])]
        self._red = red

        self.zero = ExtElement(self, (F.zero,) * n)
        self.one = ExtElement(self, (F.one,) + (F.zero,) * (n - 1))
        if n == 1:
            self.gen = ExtElement(self, (F.neg(mod[0]),))
        else:
            self.gen = ExtElement(self, (F.zero, F.one) + (F.zero,) * (n - 2))

        # sigma^i as lists of images of the power basis, i = 0 .. n-1
        power = [self.pow(self.gen, j) for j in range(n)]
        sigma_gen = self.pow(self.gen, F.q ** self.s) if n > 1 else self.gen
        images = [self.pow(sigma_gen, j).coords for j in range(n)]
        self._sigma = [tuple(x.coords for x in power)]
        for _ in range(1, n):
            prev = self._sigma[-1]
            self._sigma.append(tuple(self._lin(images, c) for c in prev))
        self._trace_basis = []
        for j in range(n):
            acc = self.zero
            for i in range(n):
                acc = self.add(acc, ExtElement(self, self._sigma[i][j]))
            if any(not F.is_zero(c) for c in acc.coords[1:]):  # pragma: no cover
                raise DomainError("trace left the base field")
            self._trace_basis.append(acc.coords[0])

    # -- internal coordinate arithmetic

    def _lin(self, cols: Sequence[Sequence[int]], x: Sequence[int]) -> tuple:
        """Σ_j x_j cols[j] in coordinates."""
        n = self.n
        p = self._p
        if p is not None:
            acc = [0] * n
            for xj, col in zip(x, cols):
                if xj:
                    for i in range(n):
                        acc[i] += xj * col[i]
            return tuple(a % p for a in acc)
        F = self.base
        acc = [F.zero] * n
        for xj, col in zip(x, cols):
            if not F.is_zero(xj):
                acc = [F.add(a, F.mul(xj, c)) for a, c in zip(acc, col)]
        return tuple(acc)

    def _mul_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        n = self.n
        p = self._p
        if p is not None:
            prod = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            res = prod[:n]
            for k in range(n, 2 * n - 1):
                c = prod[k] % p
                if c:
                    r = self._red[k - n]
                    for i in range(n):
                        res[i] += c * r[i]
            return tuple(x % p for x in res)
        F = self.base
        prod = [F.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if not F.is_zero(ai):
                for j, bj in enumerate(b):
                    prod[i + j] = F.add(prod[i + j], F.mul(ai, bj))
        res = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if not F.is_zero(c):
                res = [F.add(x, F.mul(c, r)) for x, r in zip(res, self._red[k - n])]
        return tuple(res)

    # -- field protocol

    def add(self, a: ExtElement, b: ExtElement) -> ExtElement:
        p = self._p
        if p is not None:
            return ExtElement(self, [(x + y) % p for x, y in zip(a.coords, b.coords)])
        F = self.base
        return ExtElement(self, [F.add(x, y) for x, y in zip(a.coords, b.coords)])

    def sub(self, a: ExtElement, b: ExtElement) -> ExtElement:
        p = self._p
        if p is not None:
            return ExtElement(self, [(x - y) % p for x, y in zip(a.coords, b.coords)])
        F = self.base
        return ExtElement(self, [F.sub(x, y) for x, y in zip(a.coords, b.coords)])

    def neg(self, a: ExtElement) -> ExtElement:
        F = self.base
        return ExtElement(self, [F.neg(x) for x in a.coords])

    def mul(self, a: ExtElement, b: ExtElement) -> ExtElement:
        return ExtElement(self, self._mul_coords(a.coords, b.coords))

    def inv(self, a: ExtElement) -> ExtElement:
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a: ExtElement) -> bool:
        return a.is_zero()

    def pow(self, a: ExtElement, e: int) -> ExtElement:
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one.coords
        base = a.coords
        while e:
            if e & 1:
                result = self._mul_coords(result, base)
            e >>= 1
            if e:
                base = self._mul_coords(base, base)
        return ExtElement(self, result)

    def from_int(self, k: int) -> ExtElement:
        return self.embed(self.base.from_int(k))

    # -- structure

    @property
    def q(self) -> int:
        """Order of the base field."""
        return self.base.q

    @property
    def order(self) -> int:
        return self.base.q**self.n

    @property
    def char(self) -> int:
        return self.base.p

    def embed(self, c: int) -> ExtElement:
        """The base-field scalar ``c`` as an element of L."""
        F = self.base
        return ExtElement(self, (c,) + (F.zero,) * (self.n - 1))

    def scale(self, c: int, x: ExtElement) -> ExtElement:
        F = self.base
        return ExtElement(self, [F.mul(c, a) for a in x.coords])

    def element(self, coords: Sequence[int]) -> ExtElement:
        if len(coords) != self.n:
            raise DomainError(f"expected {self.n} coordinates, got {len(coords)}")
        F = self.base
        return ExtElement(self, [F.from_int(c) if F.is_prime_field else c for c in coords])

    def in_base(self, x: ExtElement) -> bool:
        return all(self.base.is_zero(c) for c in x.coords[1:])

    def to_base(self, x: ExtElement) -> int:
        if not self.in_base(x):
            raise DomainError(f"{x!r} is not in the base field")
        return x.coords[0]

    def frobenius(self, x: ExtElement, i: int = 1) -> ExtElement:
        """σ^i(x); ``i`` is reduced mod n."""
        i %= self.n
        if i == 0:
            return x
        return ExtElement(self, self._lin(self._sigma[i], x.coords))

    def trace(self, x: ExtElement) -> int:
        F = self.base
        acc = F.zero
        for c, t in zip(x.coords, self._trace_basis):
            acc = F.add(acc, F.mul(c, t))
        return acc

    def power_basis(self) -> "LBasis":
        return LBasis(self, [self.pow(self.gen, j) for j in range(self.n)], kind="power")

    def elements(self) -> Iterator[ExtElement]:
        F = self.base
        for coords in product(list(F.elements()), repeat=self.n):
            yield ExtElement(self, coords[::-1])

    def random(self, rng: random.Random) -> ExtElement:
        F = self.base
        return ExtElement(self, [F.random(rng) for _ in range(self.n)])

    def random_nonzero(self, rng: random.Random) -> ExtElement:
        while True:
            x = self.random(rng)
            if not x.is_zero():
                return x

    def spec(self) -> str:
        text = f"{self.n}:" + ",".join(str(c) for c in self.modulus)
        return text if self.s == 1 or self.n == 1 else f"{text}:{self.s}"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, ExtField)
            and (self.base, self.n, self.modulus, self.s) == (other.base, other.n, other.modulus, other.s)
        )

    def __hash__(self) -> int:
        return hash((self.base, self.n, self.modulus, self.s))

    def __repr__(self) -> str:
        return f"ExtField({self.base.spec()} / {self.spec()})"


# -- bases of L over F ---------------------------------------------------------


class LBasis:
    """An F-basis α = (α_1, …, α_n) of L."""

    def __init__(self, ext: ExtField, elements: Iterable[ExtElement], kind: str = "arbitrary"):
        self.ext = ext
        self.elements = tuple(elements)
        self.kind = kind
        n = ext.n
        if len(self.elements) != n:
            raise SingularBasis(f"a basis needs {n} elements, got {len(self.elements)}")
        # column j holds the coordinates of α_j
        cols = [list(a.coords) for a in self.elements]
        M = linalg.transpose(cols)
        try:
            self._to_coords = linalg.inverse(M, ext.base)
        except Exception as exc:
            raise SingularBasis("elements are F-linearly dependent") from exc
        self._cols = [a.coords for a in self.elements]

    def coordinates(self, x: ExtElement) -> list[int]:
        """The unique c ∈ F^n with x = Σ c_i α_i."""
        return linalg.matvec(self._to_coords, x.coords, self.ext.base)

    def combine(self, c: Sequence[int]) -> ExtElement:
        return ExtElement(self.ext, self.ext._lin(self._cols, c))

    def frobenius(self, i: int) -> "LBasis":
        kind = "normal" if self.kind == "normal" else "arbitrary"
        if i % self.ext.n == 0:
            kind = self.kind
        return LBasis(self.ext, [self.ext.frobenius(a, i) for a in self.elements], kind=kind)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, LBasis) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"LBasis({self.kind}, {list(self.elements)})"


def frobenius(ctx: ExtField, x: ExtElement, i: int) -> ExtElement:
    return ctx.frobenius(x, i)


def trace(ctx: ExtField, x: ExtElement) -> int:
    return ctx.trace(x)


def moore_matrix(ctx: ExtField, v: Sequence[ExtElement], rows: int) -> list[list[ExtElement]]:
    """Rows σ^i(v) for i = 0 .. rows-1."""
    if rows < 1:
        raise DomainError("a Moore matrix needs at least one row")
    return [[ctx.frobenius(x, i) for x in v] for i in range(rows)]


def is_independent(ctx: ExtField, v: Sequence[ExtElement]) -> bool:
    """F-linear independence via the coordinate matrix."""
    return linalg.rank([x.coords for x in v], ctx.base) == len(v)


def dual_basis(ctx: ExtField, alpha: LBasis | Sequence[ExtElement]) -> LBasis:
    """The trace-dual basis β with Tr(α_i β_j) = δ_ij."""
    alpha = alpha if isinstance(alpha, LBasis) else LBasis(ctx, alpha)
    F = ctx.base
    n = ctx.n
    power = [ctx.pow(ctx.gen, k) for k in range(n)]
    T = [[ctx.trace(ctx.mul(a, g)) for g in power] for a in alpha]
    try:
        B = linalg.inverse(T, F)
    except Exception as exc:
        raise SingularBasis("trace form is degenerate on the given elements") from exc
    elements = [ExtElement(ctx, [B[k][j] for k in range(n)]) for j in range(n)]
    return LBasis(ctx, elements, kind="dual")


def normalize_first(ctx: ExtField, v: Sequence[ExtElement]) -> list[ExtElement]:
    """Scale ``v`` so that its first nonzero entry is 1."""
    lead = next((x for x in v if not x.is_zero()), None)
    if lead is None:
        return list(v)
    inv = ctx.inv(lead)
    return [ctx.mul(x, inv) for x in v]


def orthogonal_vector(ctx: ExtField, v: Sequence[ExtElement], powers: Iterable[int]) -> list[ExtElement]:
    """The normalized γ with Σ_j σ^i(v_j) γ_j = 0 for every i in ``powers``.

    Raises :class:`SingularBasis` unless the solution space is a line.
    """
    rows = [[ctx.frobenius(x, i) for x in v] for i in powers]
    ker = linalg.nullspace(rows, len(v), ctx)
    if len(ker) != 1:
        raise SingularBasis(f"orthogonality system has a {len(ker)}-dimensional solution space")
    return normalize_first(ctx, ker[0])


def gamma_excluded_power(n: int, rho: int) -> int:
    """The single Frobenius power left out of the γ orthogonality system."""
    return (rho - 1) % n


def solve_gamma(ctx: ExtField, beta: LBasis | Sequence[ExtElement], rho: int) -> list[ExtElement]:
    """Evaluation vector γ whose Gabidulin code has parity checks σ^i(β), i < ρ-1."""
    n = ctx.n
    if not 2 <= rho <= n:
        raise DomainError(f"need 2 <= rho <= n, got rho={rho}, n={n}")
    skip = gamma_excluded_power(n, rho)
    return orthogonal_vector(ctx, list(beta), [i for i in range(n) if i != skip])


def normal_basis(ctx: ExtField) -> LBasis:
    """The first element (in enumeration order) whose conjugates form a basis."""
    for x in ctx.elements():
        conj = [ctx.frobenius(x, i) for i in range(ctx.n)]
        if is_independent(ctx, conj):
            return LBasis(ctx, conj, kind="normal")
    raise SingularBasis("no normal basis found")  # pragma: no cover
