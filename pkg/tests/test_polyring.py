import random
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ermcodes import linalg
from ermcodes.errors import DegreeMismatch
from ermcodes.formats import poly_from_text
from ermcodes.galois import BaseField
from ermcodes.polyring import (
    DiffOp,
    HomogPoly,
    apply_diffop,
    as_diffop,
    catalecticant,
    coeff_decompose,
    condition_rows,
    dim_S,
    gram_diagonal,
    linear_diffop,
    linear_form,
    monomials,
    pairing,
    perp_in_S,
    product_of_linear_diffops,
    substitute,
)

REFERENCE_CUBIC = "3*x1^3+8*x1^2*x2+5*x1^2*x3+12*x1*x2^2+4*x1*x2*x3+4*x1*x3^2+8*x2^3+2*x2*x3^2+x3^3"


def cubic(F):
    return poly_from_text(REFERENCE_CUBIC, 3, 3, F)


def op(text, n, d, F):
    return as_diffop(poly_from_text(text, n, d, F))


def rand_poly(rng, n, d, F):
    return HomogPoly.from_vector([F.random(rng) for _ in range(dim_S(n, d))], n, d, F)


def rand_invertible(rng, n, F):
    while True:
        A = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        if linalg.rank(A, F) == n:
            return A


def test_monomial_order_matches_listed_basis():
    mons = monomials(4, 3)
    assert len(mons) == 20
    assert mons[0] == (3, 0, 0, 0) and mons[1] == (2, 1, 0, 0)
    assert mons[-2] == (0, 0, 1, 2) and mons[-1] == (0, 0, 0, 3)


def test_power_rule(F5):
    f = HomogPoly.monomial((3, 0), F5)
    assert apply_diffop(op("x1", 2, 1, F5), f) == HomogPoly(2, 2, F5, {(2, 0): 3})


@pytest.mark.parametrize("p", [7, 11, 13])
def test_second_derivatives_of_reference_cubic(p):
    F = BaseField(p)
    f = cubic(F)
    expected = {
        "x1^2": "18*x1+16*x2+10*x3",
        "x1*x2": "16*x1+24*x2+4*x3",
        "x2^2": "24*x1+48*x2",
        "x1*x3": "10*x1+4*x2+8*x3",
        "x2*x3": "4*x1+4*x3",
        "x3^2": "8*x1+4*x2+6*x3",
    }
    for D, val in expected.items():
        assert apply_diffop(op(D, 3, 2, F), f) == poly_from_text(val, 3, 1, F)


@pytest.mark.parametrize("p", [7, 11])
def test_reference_cubic_catalecticant(p):
    rows = [[9, 16, 10, 12, 4, 4], [8, 24, 4, 24, 0, 2], [5, 4, 8, 0, 4, 3]]
    assert catalecticant(cubic(BaseField(p))) == [[x % p for x in r] for r in rows]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_reference_cubic_substitution_identity(p):
    F = BaseField(p)
    l1, l2 = linear_form([1, 2, 0], F), linear_form([1, 0, 1], F)
    assert l1 * l2**2 + l1**3 + l2**3 == cubic(F)
    # g(y1, y2) = y1 y2^2 + y1^3 + y2^3 with y1 = x1 + 2x2, y2 = x1 + x3
    g = poly_from_text("x1*x2^2+x1^3+x2^3", 3, 3, F)
    A = [[1, 1, 0], [2, 0, 0], [0, 1, 0]]
    assert substitute(g, A) == cubic(F)


def test_operator_with_absent_variable_kills(F5):
    f = poly_from_text("x1^3+2*x1*x2^2", 3, 3, F5)
    assert apply_diffop(op("x3", 3, 1, F5), f).is_zero()
    assert apply_diffop(op("x1*x3+x3^2", 3, 2, F5), f).is_zero()


def test_degree_mismatch(F5):
    with pytest.raises(DegreeMismatch):
        apply_diffop(op("x1^3", 2, 3, F5), HomogPoly.monomial((2, 0), F5))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_pairing_values(d):
    F = BaseField(7)
    assert pairing(HomogPoly.monomial((d, 0), F), as_diffop(HomogPoly.monomial((d, 0), F))) == factorial(d) % 7
    mons = monomials(3, d)
    for t in mons[:4]:
        for u in mons[:4]:
            val = pairing(HomogPoly.monomial(t, F), as_diffop(HomogPoly.monomial(u, F)))
            if t != u:
                assert val == 0


def test_gram_diagonal_nonzero_when_char_exceeds_degree():
    for p, d in [(5, 4), (7, 6), (3, 2)]:
        assert all(x != 0 for x in gram_diagonal(3, d, BaseField(p)))
    assert any(x == 0 for x in gram_diagonal(2, 5, BaseField(5)))


def test_perp_extremes(F5):
    assert len(perp_in_S([], 3, 2, F5)) == comb(4, 2)
    ops = [as_diffop(HomogPoly.monomial(t, F5)) for t in monomials(3, 2)]
    assert perp_in_S(ops, 3, 2, F5) == []


def test_perp_dimension_formula(L625, rng):
    n, d = 4, 2
    for _ in range(5):
        ops = [
            product_of_linear_diffops([[L625.random(rng) for _ in range(n)] for _ in range(d)], L625)
            for _ in range(rng.randrange(1, 4))
        ]
        rows = condition_rows(ops, n, d, L625.base)
        perp = perp_in_S(ops, n, d, L625.base)
        assert len(perp) + linalg.rank(rows, L625.base, dim_S(n, d)) == dim_S(n, d)
        for f in perp:
            for D in ops:
                assert apply_diffop(D, f).is_zero()


def test_coeff_decompose(L625):
    g = L625.gen
    h = HomogPoly(4, 1, L625, {(1, 0, 0, 0): g, (0, 1, 0, 0): g + 1})
    parts = coeff_decompose(h, L625.power_basis())
    F = L625.base
    assert parts[0] == linear_form([0, 1, 0, 0], F)
    assert parts[1] == linear_form([1, 1, 0, 0], F)
    assert parts[2].is_zero() and parts[3].is_zero()


def test_coeff_decompose_round_trip(L625, rng):
    from ermcodes.galois import normal_basis

    alpha = normal_basis(L625)
    h = HomogPoly.from_vector([L625.random(rng) for _ in range(dim_S(4, 2))], 4, 2, L625)
    parts = coeff_decompose(h, alpha)
    back = HomogPoly.zero(4, 2, L625)
    for a, p in zip(alpha, parts):
        back = back + p.promote(L625).scale(a)
    assert back == h
    f = rand_poly(random.Random(1), 4, 2, L625.base)
    parts = coeff_decompose(f, L625.power_basis())
    assert parts[0] == f and all(p.is_zero() for p in parts[1:])


def test_linear_forms(L625, F5):
    assert linear_form([1, 0, 0], F5) == HomogPoly.monomial((1, 0, 0), F5)
    assert isinstance(linear_diffop([1, 0], F5), DiffOp)
    assert linear_form([0, 0], F5).is_zero()
    a = linear_diffop(list(L625.power_basis()), L625)
    assert a.field == L625 and len(a.coeffs) == 4


def test_product_of_linear_diffops(F5, L625, rng):
    prod = product_of_linear_diffops([[1, 1], [1, -1]], F5)
    assert prod == op("x1^2-x2^2", 2, 2, F5)
    assert product_of_linear_diffops([[2, 3]], F5) == linear_diffop([2, 3], F5)
    vs = [[L625.random(rng) for _ in range(3)] for _ in range(3)]
    assert product_of_linear_diffops(vs, L625) == product_of_linear_diffops(vs[::-1], L625)


def test_substitute_identity_and_swap(F5):
    f = HomogPoly.monomial((2, 0), F5)
    assert substitute(f, [[1, 0], [0, 1]]) == f
    assert substitute(f, [[0, 1], [1, 0]]) == HomogPoly.monomial((0, 2), F5)


def test_quadric_catalecticant_is_symmetric(F5):
    f = poly_from_text("x1^2+3*x1*x2+2*x2*x3+4*x3^2", 3, 2, F5)
    C = catalecticant(f)
    assert C == linalg.transpose(C)
    assert [C[i][i] for i in range(3)] == [2, 0, 3]
    assert C[0][1] == 3 and C[1][2] == 2


def test_zero_catalecticant(F5):
    assert catalecticant(HomogPoly.zero(3, 3, F5)) == [[0] * 6 for _ in range(3)]


# -- properties ----------------------------------------------------------------

seeds = st.integers(0, 10**9)


@given(seeds)
def test_apply_diffop_bilinear(seed):
    rng = random.Random(seed)
    F = BaseField(7)
    f, g = rand_poly(rng, 3, 3, F), rand_poly(rng, 3, 3, F)
    D, E = as_diffop(rand_poly(rng, 3, 2, F)), as_diffop(rand_poly(rng, 3, 2, F))
    c = F.random(rng)
    assert apply_diffop(D, f + g.scale(c)) == apply_diffop(D, f) + apply_diffop(D, g).scale(c)
    assert apply_diffop(as_diffop(D + E.scale(c)), f) == apply_diffop(D, f) + apply_diffop(E, f).scale(c)


@given(seeds)
def test_operator_product_composes(seed):
    rng = random.Random(seed)
    F = BaseField(7)
    f = rand_poly(rng, 3, 4, F)
    D1, D2 = as_diffop(rand_poly(rng, 3, 1, F)), as_diffop(rand_poly(rng, 3, 2, F))
    assert apply_diffop(as_diffop(D1 * D2), f) == apply_diffop(D1, apply_diffop(D2, f))


@given(seeds)
def test_substitute_composition_order(seed):
    rng = random.Random(seed)
    F = BaseField(5)
    f = rand_poly(rng, 3, 3, F)
    A, B = rand_invertible(rng, 3, F), rand_invertible(rng, 3, F)
    # f(x A) then x -> x B gives f(x B A)
    assert substitute(substitute(f, A), B) == substitute(f, linalg.matmul(B, A, F))


@given(seeds)
def test_catalecticant_linear_and_rank_invariant(seed):
    rng = random.Random(seed)
    F = BaseField(7)
    f, g = rand_poly(rng, 3, 3, F), rand_poly(rng, 3, 3, F)
    c = F.random(rng)
    lhs = catalecticant(f + g.scale(c))
    rhs = [[(a + c * b) % 7 for a, b in zip(r, s)] for r, s in zip(catalecticant(f), catalecticant(g))]
    assert lhs == rhs
    A = rand_invertible(rng, 3, F)
    assert linalg.rank(catalecticant(substitute(f, A)), F) == linalg.rank(catalecticant(f), F)
