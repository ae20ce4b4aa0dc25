"""Decoding of C_ρ^{n,d}(α) up to half the designed distance.

Pipeline: u-syndromes of the received word, one Gabidulin syndrome decode
per r ∈ X_{d-1,ρ} to recover the essential variables of the error, then a
linear solve for the error itself in monomials of those variables.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from typing import Any, Sequence

from . import linalg
from .codegen import CodeParams, code_condition_rows, construct_code, in_code, x_set
from .errors import DecodingFailure, DomainError, FailedVerification, Inconsistent, NotDecodable
from .essrank import EssCode, LinSpan, ess_rank
from .gabidulin import GabCodeCtx, rank_weight, syndrome_decode
from .galois import ExtElement
from .polyring import HomogPoly, apply_diffop, linear_diffop, linear_form, monomials

log = logging.getLogger(__name__)


def _check_params(params: CodeParams) -> None:
    if not params.equal_bases:
        raise DomainError("the decoder handles equal bases only")
    if params.d < 2:
        raise DomainError("the decoder needs d >= 2")


@dataclass
class SyndromeTable:
    """u-syndromes s_u for u ∈ X_{d,ρ} plus the intermediate layers."""

    values: dict[tuple[int, ...], ExtElement]
    layers: dict[int, dict[tuple[int, ...], HomogPoly]]

    def get(self, v: Sequence[int]) -> ExtElement:
        """s_v for any reordering v of an index in X_{d,ρ}."""
        key = tuple(sorted(v))
        if key not in self.values:
            raise KeyError(f"{tuple(v)} does not reorder into the syndrome index set")
        return self.values[key]

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.values.values())


def compute_syndromes(received: HomogPoly, params: CodeParams) -> SyndromeTable:
    """s_u = Z_d^u(∂) ∘ F, one linear operator per layer."""
    _check_params(params)
    ext, d, rho = params.ext, params.d, params.rho
    alpha = params.alpha
    shifted = {i: linear_diffop([ext.frobenius(a, i) for a in alpha], ext) for i in range(max(rho - 1, 1))}
    layers: dict[int, dict[tuple[int, ...], HomogPoly]] = {}
    if rho < 2:
        return SyndromeTable({}, layers)
    F = received.promote(ext)
    layers[1] = {(0,): apply_diffop(shifted[0], F)}
    for k in range(1, d):
        layers[k + 1] = {u: apply_diffop(shifted[u[-1]], layers[k][u[:-1]]) for u in x_set(k + 1, rho)}
    zero_exp = (0,) * params.n
    values = {u: h.coeffs.get(zero_exp, ext.zero) for u, h in layers[d].items()}
    return SyndromeTable(values, layers)


def gabidulin_context(params: CodeParams) -> GabCodeCtx:
    """Context with β = σ^{2-ρ}(α)."""
    ext = params.ext
    beta = params.alpha.frobenius(2 - params.rho)
    return GabCodeCtx(ext, params.rho, beta)


def recover_error_space(
    table: SyndromeTable, params: CodeParams, ctx: GabCodeCtx | None = None, weights: list | None = None
) -> LinSpan:
    """Span of the linear forms h_i^r(x) over r ∈ X_{d-1,ρ}.

    ``weights``, when given, collects the rank weight of each decoded vector.
    """
    _check_params(params)
    ext, d, rho = params.ext, params.d, params.rho
    ctx = gabidulin_context(params) if ctx is None else ctx
    alpha = params.alpha
    forms: list[list[Any]] = []
    if rho < 2:
        return LinSpan(params.n, params.field)
    for r in x_set(d - 1, rho):
        s = [ext.frobenius(table.get(r + (rho - 2 - t,)), t - rho + 2) for t in range(rho - 1)]
        try:
            h = syndrome_decode(ctx, s)
        except NotDecodable as exc:
            raise DecodingFailure(f"Gabidulin decoding failed for r={r}") from exc
        if weights is not None:
            weights.append(rank_weight(ext, h))
        forms.extend(alpha.coordinates(x) for x in h)
    return LinSpan(params.n, params.field, forms)


def monomials_in_forms(forms: Sequence[HomogPoly], d: int) -> list[HomogPoly]:
    """ℓ^t = ℓ_1^{t_1} ⋯ ℓ_e^{t_e} for |t| = d, in lex order of t."""
    e = len(forms)
    n = forms[0].n
    F = forms[0].field
    out = []
    for t in monomials(e, d):
        g = HomogPoly.monomial((0,) * n, F)
        for ell, a in zip(forms, t):
            if a:
                g = g * ell**a
        out.append(g)
    return out


def recover_error(span: LinSpan, table: SyndromeTable, params: CodeParams) -> HomogPoly:
    """The unique g' = Σ a_t ℓ^t with Z_d^u(∂) ∘ g' = s_u for all u ∈ X_{d,ρ}."""
    _check_params(params)
    F, n, d = params.field, params.n, params.d
    if span.dim == 0:
        if not table.is_zero():
            raise Inconsistent("nonzero syndromes but an empty error space")
        return HomogPoly.zero(n, d, F)
    cands = monomials_in_forms(span.forms(), d)
    cond = code_condition_rows(params)  # n rows per u, in X_{d,ρ} order
    cols = [g.to_vector() for g in cands]
    A = linalg.matmul(cond, linalg.transpose(cols), F)
    rhs = [c for u in x_set(d, params.rho) for c in table.values[u].coords]
    sol, nullity = linalg.solve(A, rhs, F, len(cands))
    if sol is None:
        raise Inconsistent("the error equations have no solution")
    if nullity:
        raise Inconsistent("the error equations do not determine the error")
    out = HomogPoly.zero(n, d, F)
    for a, g in zip(sol, cands):
        out = out + g.scale(a)
    return out


@dataclass
class DecodeReport:
    codeword: HomogPoly
    error: HomogPoly
    error_space: LinSpan
    status: str  # "clean" or "corrected"

    @property
    def error_ess_rank(self) -> int:
        return ess_rank(self.error)


def decode_report(received: HomogPoly, params: CodeParams) -> DecodeReport:
    _check_params(params)
    if (received.n, received.d) != (params.n, params.d):
        raise DomainError("received word does not lie in S_{n,d}")
    table = compute_syndromes(received, params)
    if table.is_zero():
        if not in_code(params, received):
            raise FailedVerification("zero syndromes but the word is not in the code")
        zero = HomogPoly.zero(params.n, params.d, params.field)
        return DecodeReport(received, zero, LinSpan(params.n, params.field), "clean")
    span = recover_error_space(table, params)
    if span.dim > params.radius:
        raise DecodingFailure(f"recovered error space has dimension {span.dim} > radius {params.radius}")
    err = recover_error(span, table, params)
    codeword = received - err
    if not in_code(params, codeword):
        raise FailedVerification("reconstructed word is not in the code")
    if ess_rank(err) > params.radius:
        raise FailedVerification("reconstructed error exceeds the decoding radius")
    return DecodeReport(codeword, err, span, "corrected")


def decode(received: HomogPoly, params: CodeParams) -> HomogPoly:
    """The codeword within essential-rank distance ⌊(ρ-1)/2⌋ of ``received``."""
    return decode_report(received, params).codeword


# -- simulation ----------------------------------------------------------------


def random_independent_forms(n: int, e: int, field, rng: random.Random) -> list[list[Any]]:
    while True:
        vs = [[field.random(rng) for _ in range(n)] for _ in range(e)]
        if linalg.rank(vs, field, n) == e:
            return vs


def random_error(params: CodeParams, e: int, rng: random.Random) -> HomogPoly:
    """g(ℓ_1, …, ℓ_e) for random independent ℓ and a random nonzero g ∈ S_{e,d}(F)."""
    F, n, d = params.field, params.n, params.d
    if e == 0:
        return HomogPoly.zero(n, d, F)
    forms = [linear_form(v, F) for v in random_independent_forms(n, e, F, rng)]
    mons = monomials_in_forms(forms, d)
    while True:
        coeffs = [F.random(rng) for _ in mons]
        if any(not F.is_zero(c) for c in coeffs):
            break
    out = HomogPoly.zero(n, d, F)
    for c, g in zip(coeffs, mons):
        out = out + g.scale(c)
    return out


def random_codeword(C: EssCode, rng: random.Random) -> HomogPoly:
    return C.encode([C.field.random(rng) for _ in range(C.k)])


def simulate(
    params: CodeParams, trials: int, seed: int, error_rank: int = 1, code: EssCode | None = None
) -> dict:
    """Seeded codeword + error round trips."""
    rng = random.Random(seed)
    C = construct_code(params) if code is None else code
    successes = failures = miscorrections = 0
    elapsed = 0.0
    for trial in range(trials):
        f = random_codeword(C, rng)
        g = random_error(params, error_rank, rng)
        t0 = time.perf_counter()
        try:
            out = decode(f + g, params)
        except DecodingFailure:
            failures += 1
            continue
        finally:
            elapsed += time.perf_counter() - t0
        if out == f:
            successes += 1
        else:
            miscorrections += 1
            failures += 1
            log.warning("trial %d: decoded to a different codeword", trial)
    return {
        "trials": trials,
        "successes": successes,
        "failures": failures,
        "miscorrections": miscorrections,
        "mean_decode_ms": round(1000 * elapsed / trials, 3) if trials else 0.0,
    }
