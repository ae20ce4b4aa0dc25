"""Gabidulin codes in L^n: parity checks, rank weight, syndrome decoding, and
the identification of the d = 2 codes with symmetric Gabidulin codes."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from . import linalg
from .errors import DegreeTooHigh, DomainError, NotDecodable
from .galois import ExtElement, ExtField, LBasis, dual_basis, orthogonal_vector, solve_gamma

Vector = list[ExtElement]


def rank_weight(ext: ExtField, v: Sequence[ExtElement]) -> int:
    """dim_F of the span of the entries of ``v``."""
    rows = [list(x.coords) for x in v if not x.is_zero()]
    return linalg.rank(rows, ext.base, ext.n) if rows else 0


class SkewPoly:
    """Σ f_i σ^i with coefficients in L, acting on L by evaluation."""

    def __init__(self, ext: ExtField, coeffs: Sequence[ExtElement]):
        self.ext = ext
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @property
    def degree(self) -> int:
        """σ-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: ExtElement) -> ExtElement:
        ext = self.ext
        acc = ext.zero
        for i, c in enumerate(self.coeffs):
            acc = ext.add(acc, ext.mul(c, ext.frobenius(x, i)))
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def matrix(self) -> list[list[int]]:
        """Matrix over F of z ↦ self(z) in power-basis coordinates (column j = image of γ^j)."""
        ext = self.ext
        imgs = [self(ext.element([int(i == j) for i in range(ext.n)])).coords for j in range(ext.n)]
        return linalg.transpose(imgs)

    def root_space(self) -> list[ExtElement]:
        """RREF F-basis of {z : self(z) = 0}."""
        ker = linalg.nullspace(self.matrix(), self.ext.n, self.ext.base)
        return [self.ext.element(v) for v in ker]

    def __repr__(self) -> str:
        return f"SkewPoly({self.coeffs})"


@dataclass
class GabCodeCtx:
    """Gabidulin code with parity-check rows σ^i(β), i = 0 .. ρ-2."""

    ext: ExtField
    rho: int
    beta: LBasis
    gamma: Vector | None = None
    H: list[Vector] = dc_field(init=False)

    def __post_init__(self):
        n = self.ext.n
        if not 1 <= self.rho <= n:
            raise DomainError(f"need 1 <= rho <= n, got {self.rho}")
        if not isinstance(self.beta, LBasis):
            self.beta = LBasis(self.ext, self.beta)
        self.H = [[self.ext.frobenius(b, i) for b in self.beta] for i in range(self.rho - 1)]
        if self.gamma is None and self.rho >= 2:
            self.gamma = solve_gamma(self.ext, self.beta, self.rho)

    @property
    def n(self) -> int:
        return self.ext.n

    @property
    def radius(self) -> int:
        return (self.rho - 1) // 2


def gab_encode(ctx: GabCodeCtx, f: SkewPoly | Sequence[ExtElement]) -> Vector:
    """(ev_{γ_1}(f), …, ev_{γ_n}(f))."""
    if not isinstance(f, SkewPoly):
        f = SkewPoly(ctx.ext, f)
    if f.degree > ctx.n - ctx.rho:
        raise DegreeTooHigh(f"σ-degree {f.degree} exceeds n - rho = {ctx.n - ctx.rho}")
    if ctx.gamma is None:
        raise DomainError("encoding needs rho >= 2")
    return [f(g) for g in ctx.gamma]


def syndrome(ctx: GabCodeCtx, v: Sequence[ExtElement]) -> Vector:
    ext = ctx.ext
    out = []
    for row in ctx.H:
        acc = ext.zero
        for a, h in zip(v, row):
            acc = ext.add(acc, ext.mul(a, h))
        out.append(acc)
    return out


def syndrome_decode(ctx: GabCodeCtx, s: Sequence[ExtElement], ordering: str = "forward") -> Vector:
    """The unique v with rank_weight(v) ≤ ⌊(ρ-1)/2⌋ and syndrome s.

    Writing v_j = Σ_l ε_l X_lj with y_l = Σ_j X_lj β_j, the syndromes are
    s_i = Σ_l ε_l σ^i(y_l).  For each candidate rank t' the linearized
    annihilator Λ of the y_l satisfies Σ_k λ_k σ^{-i}(s_{i+k}) = 0; its root
    space gives the y_l, a Moore system gives the ε_l.

    ``ordering="reverse"`` feeds every linear system in reverse row order; the
    answer must not change.
    """
    ext = ctx.ext
    n, rho, t = ctx.n, ctx.rho, ctx.radius
    s = list(s)
    if len(s) != rho - 1:
        raise DomainError(f"syndrome length {len(s)} != rho - 1 = {rho - 1}")
    if all(x.is_zero() for x in s):
        return [ext.zero] * n

    def order(rows):
        return rows[::-1] if ordering == "reverse" else rows

    for tp in range(1, t + 1):
        rows = [[ext.frobenius(s[i + k], -i) for k in range(tp + 1)] for i in range(rho - 1 - tp)]
        ker = linalg.nullspace(order(rows), tp + 1, ext)
        if len(ker) != 1:
            continue
        ys = SkewPoly(ext, ker[0]).root_space()
        if len(ys) != tp:
            continue
        moore = [[ext.frobenius(y, i) for y in ys] for i in range(rho - 1)]
        paired = list(zip(moore, s))
        eps, nullity = linalg.solve([r for r, _ in order(paired)], [b for _, b in order(paired)], ext, tp)
        if eps is None or nullity:
            continue
        X = [ctx.beta.coordinates(y) for y in ys]
        v = []
        for j in range(n):
            acc = ext.zero
            for l in range(tp):
                acc = ext.add(acc, ext.scale(X[l][j], eps[l]))
            v.append(acc)
        if syndrome(ctx, v) == s and rank_weight(ext, v) <= t:
            return v
    raise NotDecodable("no vector within the decoding radius has this syndrome")


# -- d = 2: symmetric Gabidulin codes -------------------------------------------


def endomorphism_matrix(ext: ExtField, alpha: LBasis, terms: Sequence[tuple[ExtElement, int]]) -> list[list[int]]:
    """Matrix A of φ = Σ μ σ^k with φ(α_i) = Σ_j A_ij β_j, β the trace-dual of α.

    Since β is dual to α, A_ij = Tr(φ(α_i) α_j).
    """
    out = []
    for a in alpha:
        img = ext.zero
        for mu, k in terms:
            img = ext.add(img, ext.mul(mu, ext.frobenius(a, k)))
        out.append([ext.trace(ext.mul(img, b)) for b in alpha])
    return out


def _flat(M: Sequence[Sequence[Any]]) -> list:
    return [x for row in M for x in row]


def _check_sym_params(ext: ExtField, ell: int) -> None:
    if ext.char <= 2:
        raise DomainError("symmetric codes need odd characteristic")
    if ell < 0 or 2 * ell > ext.n - 2:
        raise DomainError(f"need 0 <= ell and 2 ell <= n - 2, got ell={ell}, n={ext.n}")


def symmetric_setup(ext: ExtField, alpha: LBasis | None = None) -> tuple[LBasis, LBasis, Vector]:
    """(α, β, γ): β the trace-dual of α, γ ⊥ σ^i(α) for i = 0 .. n-2."""
    alpha = ext.power_basis() if alpha is None else alpha
    beta = dual_basis(ext, alpha)
    gamma = orthogonal_vector(ext, list(alpha), range(ext.n - 1))
    return alpha, beta, gamma


def symmetric_gabidulin_d2(ext: ExtField, ell: int, alpha: LBasis | None = None) -> list[list[int]]:
    """RREF basis (row-major flattened n×n matrices) of the symmetric M with
    σ^i(γ) M β^T = 0 for i = -(n-2-ℓ) .. -ℓ."""
    _check_sym_params(ext, ell)
    F = ext.base
    n = ext.n
    _, beta, gamma = symmetric_setup(ext, alpha)
    rows: list[list[int]] = []
    for a in range(n):
        for b in range(a + 1, n):
            r = [F.zero] * (n * n)
            r[a * n + b] = F.one
            r[b * n + a] = F.neg(F.one)
            rows.append(r)
    for i in range(-(n - 2 - ell), -ell + 1):
        g = [ext.frobenius(x, i) for x in gamma]
        # Σ_{a,b} g_a β_b M_ab: coordinate k of each coefficient gives one F-row
        coeffs = [ext.mul(g[a], beta[b]).coords for a in range(n) for b in range(n)]
        for k in range(n):
            rows.append([c[k] for c in coeffs])
    return linalg.nullspace(rows, n * n, F)


def symmetric_endomorphism_span(ext: ExtField, ell: int, alpha: LBasis | None = None) -> list[list[int]]:
    """RREF span of the matrices of μ_0 σ^0 + Σ_{i≤ℓ} (μ_i σ^i + σ^{-i}(μ_i) σ^{-i})."""
    _check_sym_params(ext, ell)
    alpha = ext.power_basis() if alpha is None else alpha
    mats = []
    for mu in ext.power_basis():
        mats.append(_flat(endomorphism_matrix(ext, alpha, [(mu, 0)])))
        for i in range(1, ell + 1):
            terms = [(mu, i), (ext.frobenius(mu, -i), -i)]
            mats.append(_flat(endomorphism_matrix(ext, alpha, terms)))
    return linalg.rref(mats, ext.base, ext.n * ext.n)[0]


def symmetric_catalecticant_span(ext: ExtField, ell: int, alpha: LBasis | None = None) -> list[list[int]]:
    """RREF span of C_f over the code C_{n-2ℓ}^{n,2}(σ^{n-2-ℓ}(β), γ)."""
    from .codegen import CodeParams, construct_code
    from .polyring import catalecticant

    _check_sym_params(ext, ell)
    n = ext.n
    _, beta, gamma = symmetric_setup(ext, alpha)
    first = beta.frobenius(n - 2 - ell)
    second = LBasis(ext, gamma)
    C = construct_code(CodeParams(ext, 2, n - 2 * ell, (first, second)))
    mats = [_flat(catalecticant(f)) for f in C.basis]
    return linalg.rref(mats, ext.base, n * n)[0] if mats else []


def verify_symmetric(ext: ExtField, ell: int, alpha: LBasis | None = None) -> dict:
    """Compare the three descriptions of the symmetric Gabidulin code."""
    cond = symmetric_gabidulin_d2(ext, ell, alpha)
    endo = symmetric_endomorphism_span(ext, ell, alpha)
    cat = symmetric_catalecticant_span(ext, ell, alpha)
    return {
        "n": ext.n,
        "ell": ell,
        "dim_conditions": len(cond),
        "dim_endomorphisms": len(endo),
        "dim_catalecticant": len(cat),
        "expected_dim": ext.n * (ell + 1),
        "equal": cond == endo == cat,
    }
