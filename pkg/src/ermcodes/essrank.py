"""Essential rank, essential variables, code-level metrics and bounds.

The production path computes ``ess(f)`` as the rank of the first
catalecticant.  :class:`EssRankOracle` implements the definition directly
(search over subspaces of linear forms) and exists only to cross-check it.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Any, Iterator, Sequence

import numpy as np

from . import linalg
from .errors import CharTooSmall, DegreeMismatch, DomainError, TooLarge
from .polyring import HomogPoly, catalecticant, dim_S, linear_form, monomials, substitute

DEFAULT_BUDGET = 10**7


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    """Enumeration budget, overridable through ``ESSRANK_BUDGET``."""
    raw = os.environ.get("ESSRANK_BUDGET")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"ESSRANK_BUDGET must be an integer, got {raw!r}") from exc


def require_char(field, d: int) -> None:
    if field.char <= d:
        raise CharTooSmall(f"characteristic {field.char} must exceed the degree {d}")


# -- spans of linear forms -----------------------------------------------------


class LinSpan:
    """A subspace of S_{n,1}(F), stored as an RREF basis of coefficient vectors."""

    def __init__(self, n: int, field, vectors: Sequence[Sequence[Any]] = ()):
        self.n = n
        self.field = field
        self.basis = linalg.rref(list(vectors), field, n)[0] if vectors else []

    @property
    def dim(self) -> int:
        return len(self.basis)

    def forms(self) -> list[HomogPoly]:
        return [linear_form(v, self.field) for v in self.basis]

    def contains(self, v: Sequence[Any]) -> bool:
        return linalg.rank(self.basis + [list(v)], self.field, self.n) == self.dim

    def __add__(self, other: "LinSpan") -> "LinSpan":
        return LinSpan(self.n, self.field, self.basis + other.basis)

    def __le__(self, other: "LinSpan") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinSpan):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.basis == other.basis

    def __repr__(self) -> str:
        from .formats import poly_to_text

        return "LinSpan<" + ", ".join(poly_to_text(f) for f in self.forms()) + ">"


# -- single polynomials --------------------------------------------------------


def ess_rank(f: HomogPoly) -> int:
    """Essential rank of ``f``, as the rank of its first catalecticant."""
    require_char(f.field, f.d)
    if f.is_zero():
        return 0
    return linalg.rank(catalecticant(f), f.field)


def ess_distance(f: HomogPoly, g: HomogPoly) -> int:
    return ess_rank(f - g)


def ess_variables(f: HomogPoly) -> LinSpan:
    """Span of all order-(d-1) derivatives of ``f``.

    Column ``u`` of the catalecticant is ``∂^u ∘ f`` divided by ``u!``, so the
    column space is the space of essential variables.
    """
    require_char(f.field, f.d)
    if f.is_zero():
        return LinSpan(f.n, f.field)
    return LinSpan(f.n, f.field, linalg.transpose(catalecticant(f)))


def _subspaces(n: int, r: int, field) -> Iterator[list[list[Any]]]:
    """All r-dimensional subspaces of F^n, each as its RREF r×n matrix."""
    elems = list(field.elements())
    for pivots in itertools.combinations(range(n), r):
        slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for values in itertools.product(elems, repeat=len(slots)):
            M = [[field.zero] * n for _ in range(r)]
            for i, pc in enumerate(pivots):
                M[i][pc] = field.one
            for (i, c), v in zip(slots, values):
                M[i][c] = v
            yield M


def subspace_count(n: int, r: int, q: int) -> int:
    """Gaussian binomial [n choose r]_q."""
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class EssRankOracle:
    """Essential rank straight from the definition, for tiny (q, n, d).

    For every r and every r-dimensional space of linear forms, the span of all
    degree-d monomials in a basis of that space is cached; ``ess(f)`` is the
    smallest r for which one of these spans contains ``f``.
    """

    def __init__(self, field, n: int, d: int, budget: int | None = None):
        self.field, self.n, self.d = field, n, d
        total = sum(subspace_count(n, r, field.q) for r in range(1, n + 1))
        limit = budget_from_env() if budget is None else budget
        if total > limit:
            raise TooLarge(f"{total} subspaces exceed the budget {limit}")
        self._spans: list[tuple[int, list, list[int]]] = []
        m = dim_S(n, d)
        for r in range(1, n + 1):
            for M in _subspaces(n, r, field):
                forms = [linear_form(row, field) for row in M]
                vecs = []
                for t in monomials(r, d):
                    g = HomogPoly.monomial((0,) * n, field)
                    for ell, a in zip(forms, t):
                        if a:
                            g = g * ell**a
                    vecs.append(g.to_vector())
                R, piv = linalg.rref(vecs, field, m)
                self._spans.append((r, R, piv))

    def _in_span(self, v: list, R: list, piv: list[int]) -> bool:
        F = self.field
        v = list(v)
        for row, pc in zip(R, piv):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return all(F.is_zero(x) for x in v)

    def __call__(self, f: HomogPoly) -> int:
        if (f.n, f.d) != (self.n, self.d):
            raise DegreeMismatch("oracle built for a different S_{n,d}")
        if f.is_zero():
            return 0
        v = f.to_vector()
        for r, R, piv in self._spans:
            if self._in_span(v, R, piv):
                return r
        raise AssertionError("every polynomial lies in the span for r = n")


def ess_rank_bruteforce(f: HomogPoly, budget: int | None = None) -> int:
    return EssRankOracle(f.field, f.n, f.d, budget)(f)


# -- codes -----------------------------------------------------------------


class EssCode:
    """An F-linear subspace of S_{n,d}(F) held in canonical RREF."""

    def __init__(self, n: int, d: int, field, polys: Sequence[HomogPoly] = (), rho: int | None = None):
        self.n, self.d, self.field, self.rho = n, d, field, rho
        for f in polys:
            if (f.n, f.d) != (n, d):
                raise DegreeMismatch("code members must lie in S_{n,d}")
        rows = [f.to_vector() for f in polys]
        R = linalg.rref(rows, field, dim_S(n, d))[0] if rows else []
        self.basis = [HomogPoly.from_vector(r, n, d, field) for r in R]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return dim_S(self.n, self.d)

    def generator_matrix(self) -> list[list[Any]]:
        return [f.to_vector() for f in self.basis]

    def encode(self, message: Sequence[Any]) -> HomogPoly:
        from .errors import LengthMismatch

        if len(message) != self.k:
            raise LengthMismatch(f"message length {len(message)} != k = {self.k}")
        F = self.field
        out = HomogPoly.zero(self.n, self.d, F)
        for c, f in zip(message, self.basis):
            out = out + f.scale(c)
        return out

    def contains(self, f: HomogPoly) -> bool:
        rows = self.generator_matrix()
        return linalg.rank(rows + [f.to_vector()], self.field, self.ambient_dim) == self.k

    def __eq__(self, other) -> bool:
        if not isinstance(other, EssCode):
            return NotImplemented
        return (self.n, self.d, self.field) == (other.n, other.d, other.field) and self.basis == other.basis

    def __repr__(self) -> str:
        return f"EssCode(n={self.n}, d={self.d}, k={self.k}, rho={self.rho}, field={self.field!r})"


def apply_equivalence(C: EssCode, A: Sequence[Sequence[Any]], lam: Any = 1) -> EssCode:
    """The code {λ f(x·A) : f ∈ C} in canonical form."""
    F = C.field
    lam = F.from_int(lam) if isinstance(lam, int) and F.is_prime_field else lam
    if F.is_zero(lam):
        raise DomainError("the scalar must be nonzero")
    linalg.inverse(A, F)  # raises SingularMatrix
    return EssCode(C.n, C.d, F, [substitute(f, A).scale(lam) for f in C.basis], C.rho)


def code_ess_variables(C: EssCode) -> LinSpan:
    """Sum of the essential-variable spaces of the basis codewords."""
    require_char(C.field, C.d)
    cols: list = []
    for f in C.basis:
        cols.extend(linalg.transpose(catalecticant(f)))
    return LinSpan(C.n, C.field, cols)


def is_nondegenerate(C: EssCode) -> bool:
    return code_ess_variables(C).dim == C.n


# -- exhaustive minimum distance ---------------------------------------------


@dataclass
class MinDistanceResult:
    min_distance: int | None
    count_at_min: int
    first_argmin: int | None
    scanned: int
    start: int
    stop: int
    histogram: dict[int, int] = dc_field(default_factory=dict)

    def merge(self, other: "MinDistanceResult") -> "MinDistanceResult":
        hist = dict(self.histogram)
        for r, c in other.histogram.items():
            hist[r] = hist.get(r, 0) + c
        cands = [x for x in (self, other) if x.min_distance is not None]
        if not cands:
            best, count, arg = None, 0, None
        else:
            best = min(x.min_distance for x in cands)
            count = sum(x.count_at_min for x in cands if x.min_distance == best)
            arg = min(x.first_argmin for x in cands if x.min_distance == best)
        return MinDistanceResult(
            best, count, arg, self.scanned + other.scanned, min(self.start, other.start), max(self.stop, other.stop), hist
        )


def message_digits(indices: np.ndarray, q: int, k: int) -> np.ndarray:
    """Base-q digits of message indices; digit j of index i is (i // q^j) % q."""
    out = np.empty((len(indices), k), dtype=np.int64)
    rest = indices.astype(np.int64)
    for j in range(k):
        out[:, j] = rest % q
        rest //= q
    return out


def _scan_prime(p: int, cats: np.ndarray, start: int, stop: int, chunk: int) -> MinDistanceResult:
    k = cats.shape[0]
    acc = MinDistanceResult(None, 0, None, 0, start, stop)
    for lo in range(start, stop, chunk):
        hi = min(stop, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = message_digits(idx, p, k)
        mats = np.tensordot(digits, cats, axes=(1, 0)) % p
        ranks = linalg.batch_rank_mod_p(mats, p)
        best = int(ranks.min())
        hits = np.flatnonzero(ranks == best)
        vals, counts = np.unique(ranks, return_counts=True)
        part = MinDistanceResult(
            best, int(hits.size), lo + int(hits[0]), hi - lo, lo, hi, {int(v): int(c) for v, c in zip(vals, counts)}
        )
        acc = acc.merge(part)
    acc.start, acc.stop = start, stop
    return acc


def _scan_generic(C: EssCode, start: int, stop: int) -> MinDistanceResult:
    F = C.field
    q, k = F.q, C.k
    elems = list(F.elements())
    acc = MinDistanceResult(None, 0, None, 0, start, stop)
    for i in range(start, stop):
        msg = [elems[(i // q**j) % q] for j in range(k)]
        r = ess_rank(C.encode(msg))
        acc = acc.merge(MinDistanceResult(r, 1, i, 1, i, i + 1, {r: 1}))
    acc.start, acc.stop = start, stop
    return acc


def code_min_distance_bruteforce(
    C: EssCode,
    budget: int | None = None,
    start: int = 1,
    stop: int | None = None,
    jobs: int = 1,
    chunk: int = 20000,
) -> MinDistanceResult:
    """Minimum essential rank over nonzero codewords by exhaustive scan.

    Message ``i`` (1 ≤ i < q^k) is the codeword with coefficient vector given
    by the base-q digits of ``i``.  ``start``/``stop`` select a slice so long
    scans can be restarted; the merged result does not depend on ``jobs`` or
    ``chunk``.
    """
    require_char(C.field, C.d)
    F = C.field
    total = F.q**C.k
    stop = total if stop is None else min(stop, total)
    start = max(start, 1)
    limit = budget_from_env() if budget is None else budget
    if stop - start > limit:
        raise TooLarge(f"{stop - start} codewords exceed the budget {limit}")
    if stop <= start:
        return MinDistanceResult(None, 0, None, 0, start, max(start, stop))
    if not F.is_prime_field:
        return _scan_generic(C, start, stop)
    cats = np.array([catalecticant(f) for f in C.basis], dtype=np.int64)
    if jobs <= 1:
        return _scan_prime(F.p, cats, start, stop, chunk)
    bounds = list(range(start, stop, chunk)) + [stop]
    pieces = list(zip(bounds[:-1], bounds[1:]))
    acc = MinDistanceResult(None, 0, None, 0, start, stop)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_scan_prime, F.p, cats, lo, hi, chunk) for lo, hi in pieces]
        for fut in futures:
            acc = acc.merge(fut.result())
    return acc


# -- bounds ----------------------------------------------------------------


def _check_r(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got r={r}, n={n}")


def singleton_like_bound(n: int, d: int, r: int) -> int:
    _check_r(n, r)
    return comb(n + d - 1, d) - comb(r + d - 2, d)


def inherited_bound(n: int, d: int, r: int) -> int:
    _check_r(n, r)
    return comb(n + d - 2, d - 1) * (n - r + 1)


def schmidt_bound(n: int, r: int) -> int:
    """Dimension bound for symmetric rank-metric codes over a finite field."""
    _check_r(n, r)
    if (n - r) % 2 == 0:
        return n * (n - r + 2) // 2
    return (n + 1) * (n - r + 1) // 2


def dim_lower_bound_s(n: int, d: int, rho: int) -> int:
    _check_r(n, rho)
    if rho == 1:
        return comb(n + d - 1, d)
    return comb(n + d - 1, d) - n * comb(rho + d - 3, d - 1)


def bounds_report(n: int, d: int, r: int) -> dict:
    out = {
        "singleton_like": singleton_like_bound(n, d, r),
        "inherited": inherited_bound(n, d, r),
        "s_lower": dim_lower_bound_s(n, d, r),
        "schmidt": schmidt_bound(n, r) if d == 2 else None,
    }
    return out
