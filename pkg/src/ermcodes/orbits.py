"""Shift orbits of d-element multisets over Z/nZ meeting the family R.

R consists of the multisets with all elements in {0, …, k} that contain 0.
These counts predict the codimension of the codes for k = ρ - 2.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, TooLarge, Unsupported


@dataclass(frozen=True, order=True)
class MultisetZn:
    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("modulus must be positive")
        object.__setattr__(self, "elems", tuple(sorted(x % self.n for x in self.elems)))

    @property
    def d(self) -> int:
        return len(self.elems)

    def counts(self) -> Counter:
        return Counter(self.elems)


def shift(S: MultisetZn, x: int) -> MultisetZn:
    return MultisetZn(S.n, tuple(y + x for y in S.elems))


def canonical(S: MultisetZn) -> tuple[int, ...]:
    """Lexicographically smallest sorted shift: one label per orbit."""
    return min(shift(S, x).elems for x in range(S.n))


def orbit(S: MultisetZn) -> set[MultisetZn]:
    return {shift(S, x) for x in range(S.n)}


def _check(n: int, d: int, k: int) -> None:
    if d < 2:
        raise DomainError("d must be >= 2")
    if not 0 <= k < n:
        raise DomainError(f"need n > k >= 0, got n={n}, k={k}")


def restricted_family(n: int, d: int, k: int) -> Iterator[MultisetZn]:
    """The multisets in R: a forced 0 plus d-1 elements of {0, …, k}."""
    for rest in itertools.combinations_with_replacement(range(k + 1), d - 1):
        yield MultisetZn(n, (0,) + rest)


def restricted_family_size(d: int, k: int) -> int:
    return comb(d - 1 + k, d - 1)


def orbit_count_bruteforce(n: int, d: int, k: int, budget: int = 10**6) -> int:
    _check(n, d, k)
    size = restricted_family_size(d, k)
    if size > budget:
        raise TooLarge(f"|R| = {size} exceeds the budget {budget}")
    seen = set()
    count = 0
    for S in restricted_family(n, d, k):
        count += 1
        seen.add(canonical(S))
    assert count == size
    return len(seen)


def orbit_count_closed(n: int, d: int, k: int) -> int:
    """Closed-form count, proven only for k < 2n/3."""
    _check(n, d, k)
    base = comb(d - 1 + k, d - 1)
    if 2 * k < n:
        return base
    if 3 * k < 2 * n:
        w = 2 * k - n + 1
        twice = w * comb(d - 2 + w, d - 2)
        if d % 2 == 0 and n % 2 == 0:
            twice -= comb(d // 2 - 1 + k - n // 2, d // 2 - 1)
        if twice % 2:
            raise AssertionError("odd pair count")  # pragma: no cover
        return base - twice // 2
    raise Unsupported(f"no closed form for k >= 2n/3 (n={n}, k={k})")


def orbit_count(n: int, d: int, k: int, method: str = "both") -> dict:
    out: dict = {"n": n, "d": d, "k": k, "method": method}
    if method == "brute":
        out["count"] = orbit_count_bruteforce(n, d, k)
    elif method == "closed":
        out["count"] = orbit_count_closed(n, d, k)
    elif method == "both":
        brute = orbit_count_bruteforce(n, d, k)
        try:
            closed = orbit_count_closed(n, d, k)
        except Unsupported:
            closed = None
        out.update(count=brute, brute=brute, closed=closed, agreement=None if closed is None else closed == brute)
    else:
        raise DomainError(f"unknown method {method!r}")
    return out


# -- the pairing map for n/2 <= k < 2n/3 -------------------------------------------


def _check_pi_range(n: int, k: int) -> None:
    if not (2 * k >= n and 3 * k < 2 * n):
        raise DomainError(f"the pairing map needs n/2 <= k < 2n/3, got n={n}, k={k}")


def pi_encode(low: Sequence[int], high: Sequence[int], n: int, k: int) -> MultisetZn:
    """Multiset with low[i] copies of i and high[j] copies of k - b + j."""
    _check_pi_range(n, k)
    a, b = len(low) - 1, len(high) - 1
    if a < 0 or b < 0 or a + b != 2 * k - n:
        raise DomainError("tuple lengths must satisfy a + b = 2k - n")
    if low[0] < 1 or high[0] < 1 or min(low) < 0 or min(high) < 0:
        raise DomainError("leading multiplicities must be positive, the rest nonnegative")
    if tuple(low) == tuple(high):
        raise DomainError("the two tuples must differ")
    elems = [i for i, c in enumerate(low) for _ in range(c)]
    elems += [k - b + j for j, c in enumerate(high) for _ in range(c)]
    return MultisetZn(n, tuple(elems))


def pi_decode(S: MultisetZn, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of :func:`pi_encode`."""
    n = S.n
    _check_pi_range(n, k)
    upper = [y for y in S.elems if y >= n - k]
    if not upper or 0 not in S.elems or max(S.elems) > k:
        raise DomainError("multiset is not in the image of the pairing map")
    x = n - min(upper)
    b = x - (n - k)
    a = k - x
    if a < 0 or b < 0:
        raise DomainError("multiset is not in the image of the pairing map")
    c = S.counts()
    low = tuple(c.get(i, 0) for i in range(a + 1))
    high = tuple(c.get(k - b + j, 0) for j in range(b + 1))
    if sum(low) + sum(high) != S.d or low == high:
        raise DomainError("multiset is not in the image of the pairing map")
    return low, high


def pi_domain(n: int, d: int, k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All valid (low, high) tuple pairs."""
    _check_pi_range(n, k)
    w = 2 * k - n
    for a in range(w + 1):
        b = w - a
        for total_low in range(1, d):
            for low in _compositions(total_low, a + 1):
                for high in _compositions(d - total_low, b + 1):
                    if low != high:
                        yield low, high


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative ints summing to ``total`` with first entry >= 1."""
    for rest in itertools.combinations_with_replacement(range(parts), total - 1):
        c = [1] + [0] * (parts - 1)
        for i in rest:
            c[i] += 1
        yield tuple(c)
