"""Construction of the codes C_ρ^{n,d}(α^(1), …, α^(d))."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Any, Sequence

from .errors import DomainError
from .essrank import EssCode, dim_lower_bound_s, require_char, singleton_like_bound
from .galois import ExtField, LBasis
from .polyring import DiffOp, HomogPoly, condition_rows, dim_S, perp_in_S, product_of_linear_diffops


@dataclass(frozen=True)
class CodeParams:
    """Parameters of a code: the extension, the degree, the designed distance
    and the d bases (all equal unless given otherwise)."""

    ext: ExtField
    d: int
    rho: int
    bases: tuple[LBasis, ...] = ()

    def __post_init__(self):
        n = self.ext.n
        if self.d < 1:
            raise DomainError("degree d must be >= 1")
        if not 1 <= self.rho <= n:
            raise DomainError(f"need 1 <= rho <= n, got rho={self.rho}, n={n}")
        if not self.bases:
            object.__setattr__(self, "bases", (self.ext.power_basis(),) * self.d)
        elif len(self.bases) == 1:
            object.__setattr__(self, "bases", tuple(self.bases) * self.d)
        else:
            object.__setattr__(self, "bases", tuple(self.bases))
        if len(self.bases) != self.d:
            raise DomainError(f"expected {self.d} bases, got {len(self.bases)}")
        for b in self.bases:
            if b.ext != self.ext:
                raise DomainError("bases must live in the same extension")

    @property
    def n(self) -> int:
        return self.ext.n

    @property
    def field(self):
        return self.ext.base

    @property
    def alpha(self) -> LBasis:
        return self.bases[0]

    @property
    def equal_bases(self) -> bool:
        return all(b == self.bases[0] for b in self.bases)

    @property
    def radius(self) -> int:
        return (self.rho - 1) // 2

    @classmethod
    def with_alpha(cls, ext: ExtField, d: int, rho: int, alpha: LBasis | None = None) -> "CodeParams":
        return cls(ext, d, rho, (alpha,) if alpha is not None else ())


def x_set(k: int, rho: int) -> list[tuple[int, ...]]:
    """Nondecreasing k-tuples (0, r_2, …, r_k) with entries at most ρ-2."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if rho < 2:
        return []
    tails = itertools.combinations_with_replacement(range(rho - 1), k - 1)
    return [(0,) + t for t in tails]


def x_set_size(k: int, rho: int) -> int:
    return comb(k + rho - 3, k - 1) if rho >= 2 else 0


def shifted_operator(params: CodeParams, r: Sequence[int]) -> DiffOp:
    """∏_j σ^{r_j}(α^(j))(∂) for a tuple r of length ≤ d."""
    ext = params.ext
    vs = [[ext.frobenius(a, rj) for a in params.bases[j]] for j, rj in enumerate(r)]
    return product_of_linear_diffops(vs, ext)


def defining_operators(params: CodeParams) -> list[DiffOp]:
    """The degree-d operators whose common kernel in S_{n,d}(F) is the code."""
    d, rho = params.d, params.rho
    if rho < 2:
        return []
    if params.equal_bases:
        index = x_set(d, rho)
    else:
        index = [(0,) + t for t in itertools.product(range(rho - 1), repeat=d - 1)]
    return [shifted_operator(params, r) for r in index]


def code_condition_rows(params: CodeParams) -> list[list[Any]]:
    """F-linear conditions on coefficient vectors (n rows per operator)."""
    return condition_rows(defining_operators(params), params.n, params.d, params.field)


def construct_code(params: CodeParams) -> EssCode:
    require_char(params.field, params.d)
    n, d = params.n, params.d
    basis = perp_in_S(defining_operators(params), n, d, params.field)
    return EssCode(n, d, params.field, basis, params.rho)


def generator_matrix(C: EssCode) -> list[list[Any]]:
    return C.generator_matrix()


def parameter_report(params: CodeParams, C: EssCode) -> dict:
    n, d, rho = params.n, params.d, params.rho
    return {
        "n": n,
        "d": d,
        "rho": rho,
        "k": C.k,
        "codim": dim_S(n, d) - C.k,
        "s_lower": dim_lower_bound_s(n, d, rho),
        "singleton_like": singleton_like_bound(n, d, rho),
    }


def in_code(params: CodeParams, f: HomogPoly) -> bool:
    """Check every defining condition directly on ``f``."""
    F = params.field
    vec = f.to_vector()
    for row in code_condition_rows(params):
        acc = F.zero
        for a, b in zip(row, vec):
            acc = F.add(acc, F.mul(a, b))
        if not F.is_zero(acc):
            return False
    return True


def codim_conjecture_report(params: CodeParams) -> dict:
    """Compare the actual codimension with n × (orbit count for k = ρ-2)."""
    from .orbits import orbit_count_bruteforce

    if not params.equal_bases:
        raise DomainError("the codimension experiment needs equal bases")
    C = construct_code(params)
    n, d, rho = params.n, params.d, params.rho
    actual = dim_S(n, d) - C.k
    predicted = 0 if rho == 1 else n * orbit_count_bruteforce(n, d, rho - 2)
    return {
        "n": n,
        "d": d,
        "rho": rho,
        "actual_codim": actual,
        "predicted_codim": predicted,
        "match": actual == predicted,
    }
