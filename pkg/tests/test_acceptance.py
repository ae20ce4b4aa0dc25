"""Acceptance criteria.  Each test prints one PASS/FAIL line and the lines are
repeated in the terminal summary."""

import functools
import itertools
import random
import time

from ermcodes import linalg
from ermcodes.codegen import CodeParams, construct_code
from ermcodes.essdecode import simulate
from ermcodes.essrank import (
    EssCode,
    EssRankOracle,
    LinSpan,
    code_min_distance_bruteforce,
    dim_lower_bound_s,
    ess_rank,
    ess_variables,
    inherited_bound,
    schmidt_bound,
    singleton_like_bound,
)
from ermcodes.formats import poly_from_text
from ermcodes.gabidulin import GabCodeCtx, syndrome, syndrome_decode, verify_symmetric
from ermcodes.galois import BaseField, ExtField
from ermcodes.orbits import orbit_count_bruteforce, orbit_count_closed
from ermcodes.polyring import HomogPoly, catalecticant, dim_S, substitute

from .conftest import REFERENCE_MODULUS
from .golden import FIRST_ROW_433, GENERATOR_433
from .test_essrank import SECOND_CUBIC
from .test_polyring import REFERENCE_CUBIC

RESULTS: dict[int, str] = {}


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException:
                line = f"criterion {number:2d} FAIL  {title}"
                RESULTS[number] = line
                print(line)
                raise
            line = f"criterion {number:2d} PASS  {title} ({time.perf_counter() - t0:.2f}s{', ' + detail if detail else ''})"
            RESULTS[number] = line
            print(line)

        return run

    return wrap


def reference_ext():
    return ExtField(BaseField(5), 4, REFERENCE_MODULUS)


@criterion(1, "generator matrix of the (4,3,3) code over F_5 is reproduced")
def test_criterion_01_golden_matrix():
    t0 = time.perf_counter()
    G = construct_code(CodeParams(reference_ext(), 3, 3)).generator_matrix()
    elapsed = time.perf_counter() - t0
    assert G == GENERATOR_433
    assert elapsed < 5


@criterion(2, "first row polynomial and its essential rank 4")
def test_criterion_02_first_row():
    C = construct_code(CodeParams(reference_ext(), 3, 3))
    t0 = time.perf_counter()
    f = poly_from_text(FIRST_ROW_433, 4, 3, BaseField(5))
    assert C.basis[0] == f
    assert ess_rank(f) == 4
    assert time.perf_counter() - t0 < 1


@criterion(3, "all 5^8 - 1 nonzero codewords of the (4,3,3) code have ess >= 3")
def test_criterion_03_exhaustive_min_distance():
    C = construct_code(CodeParams(reference_ext(), 3, 3))
    res = code_min_distance_bruteforce(C)
    assert res.scanned == 5**8 - 1
    assert res.min_distance >= 3
    return f"histogram {dict(sorted(res.histogram.items()))}"


@criterion(4, "catalecticant of the reference cubic over F_7 and F_11")
def test_criterion_04_catalecticant():
    rows = [[9, 16, 10, 12, 4, 4], [8, 24, 4, 24, 0, 2], [5, 4, 8, 0, 4, 3]]
    for p in (7, 11):
        F = BaseField(p)
        f = poly_from_text(REFERENCE_CUBIC, 3, 3, F)
        C = catalecticant(f)
        assert C == [[x % p for x in r] for r in rows]
        assert linalg.rank(C, F) == 2
        assert ess_variables(f) == LinSpan(3, F, [[1, 2, 0], [1, 0, 1]])


@criterion(5, "two-cubic code over F_7 has minimum distance 2")
def test_criterion_05_two_cubic_code():
    F = BaseField(7)
    C = EssCode(3, 3, F, [poly_from_text(REFERENCE_CUBIC, 3, 3, F), poly_from_text(SECOND_CUBIC, 3, 3, F)])
    assert code_min_distance_bruteforce(C).min_distance == 2


@criterion(6, "decoder round trips: 1000 on (4,3,3) and 200 on (5,3,3)")
def test_criterion_06_decoder():
    t0 = time.perf_counter()
    a = simulate(CodeParams(reference_ext(), 3, 3), 1000, seed=1)
    b = simulate(CodeParams(ExtField(BaseField(5), 5), 3, 3), 200, seed=2)
    assert a["successes"] == 1000 and a["failures"] == 0
    assert b["successes"] == 200 and b["failures"] == 0
    assert time.perf_counter() - t0 < 120


@criterion(7, "1000 rank-1 Gabidulin syndrome decodes for (n, rho) = (4, 3)")
def test_criterion_07_gabidulin():
    L = reference_ext()
    F = L.base
    ctx = GabCodeCtx(L, 3, L.power_basis())
    rng = random.Random(7)
    for _ in range(1000):
        eps = L.random(rng)
        X = [F.random(rng) for _ in range(4)]
        v = [L.scale(x, eps) for x in X]
        assert syndrome_decode(ctx, syndrome(ctx, v)) == v


@criterion(8, "closed orbit counts equal brute force for n <= 12")
def test_criterion_08_orbits():
    t0 = time.perf_counter()
    cases = 0
    for n in range(1, 13):
        for d in range(2, 6):
            for k in range(n):
                if 3 * k < 2 * n:
                    assert orbit_count_closed(n, d, k) == orbit_count_bruteforce(n, d, k)
                    cases += 1
    assert time.perf_counter() - t0 < 60
    return f"{cases} cases"


@criterion(9, "dim >= s(n,d,rho) for n <= 6, d <= 4 over F_5 and F_7")
def test_criterion_09_dimension_bound():
    cases = 0
    for p in (5, 7):
        F = BaseField(p)
        for n in range(1, 7):
            L = ExtField(F, n)
            for d in range(1, 5):
                if p <= d:
                    continue
                for rho in range(1, n + 1):
                    k = construct_code(CodeParams(L, d, rho)).k
                    assert k >= dim_lower_bound_s(n, d, rho)
                    assert k <= dim_S(n, d)
                    cases += 1
    assert construct_code(CodeParams(reference_ext(), 3, 3)).k == 8 == dim_lower_bound_s(4, 3, 3)
    return f"{cases} instances"


@criterion(10, "bound ordering for n <= 30, 2 <= d <= 6")
def test_criterion_10_bound_ordering():
    for n in range(1, 31):
        for d in range(2, 7):
            for r in range(1, n + 1):
                assert singleton_like_bound(n, d, r) <= inherited_bound(n, d, r)
            assert singleton_like_bound(n, d, n) == inherited_bound(n, d, n)
        for r in range(1, n + 1):
            s, t = schmidt_bound(n, r), singleton_like_bound(n, 2, r)
            assert s <= t
            assert (s == t) == (r in (1, n))


@criterion(11, "d = 2 codes coincide with symmetric Gabidulin codes")
def test_criterion_11_symmetric():
    for p in (3, 5):
        for n, ell in [(4, 0), (4, 1), (5, 0)]:
            rep = verify_symmetric(ExtField(BaseField(p), n), ell)
            assert rep["equal"], (p, n, ell)
            assert rep["dim_catalecticant"] == n * (ell + 1)


@criterion(12, "metric and isometry properties on 10^4 samples")
def test_criterion_12_metric():
    F = BaseField(7)
    n, d = 4, 3
    rng = random.Random(12)
    N = dim_S(n, d)
    for _ in range(10_000):
        f = HomogPoly.from_vector([F.random(rng) for _ in range(N)], n, d, F)
        g = HomogPoly.from_vector([F.random(rng) for _ in range(N)], n, d, F)
        rf = ess_rank(f)
        assert ess_rank(f + g) <= rf + ess_rank(g)
        assert ess_rank(f.scale(F.random_nonzero(rng))) == rf
        assert rf <= n
        while True:
            A = [[F.random(rng) for _ in range(n)] for _ in range(n)]
            if linalg.rank(A, F) == n:
                break
        assert ess_rank(substitute(f, A)) == rf


@criterion(13, "catalecticant rank equals subspace search on S_{2,3}(F_5) and S_{3,2}(F_3)")
def test_criterion_13_oracle():
    for p, n, d in [(5, 2, 3), (3, 3, 2)]:
        F = BaseField(p)
        oracle = EssRankOracle(F, n, d)
        for v in itertools.product(range(p), repeat=dim_S(n, d)):
            f = HomogPoly.from_vector(list(v), n, d, F)
            assert oracle(f) == ess_rank(f)
