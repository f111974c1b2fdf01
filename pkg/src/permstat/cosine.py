"""Permutations with a prescribed dot product against the identity.

``construct(k)`` builds pi with ``1 . pi = k`` for every positive k outside
:data:`EXCLUDED`; ``count_with_cosine`` counts all such pi by exhaustion.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .errors import MOutOfRange, NotAchievable, OutOfTable, RankCapExceeded, RankTooSmall
from .permutation import Permutation, dot, enumeration_cap, identity, iter_tuples

EXCLUDED = frozenset({2, 3, 6, 7, 8, 9, 12, 15, 16, 17, 18, 19, 31, 32, 33, 34})

# ninvsum(NU[m]) == m
NU = (
    (4, 3, 2, 1), (3, 4, 2, 1), (3, 4, 1, 2), (4, 2, 1, 3), (4, 1, 2, 3),
    (2, 4, 1, 3), (3, 2, 1, 4), (1, 4, 2, 3), (2, 1, 4, 3), (1, 2, 4, 3),
    (1, 2, 3, 4),
)

_SMALL = {
    1: (1,),
    4: (2, 1),
    5: (1, 2),
    10: (3, 2, 1),
    11: (3, 1, 2),
    13: (1, 3, 2),
    14: (1, 2, 3),
}


def tetra(n: int) -> int:
    """``C(n+2, 3)``, the least dot product over S_n."""
    return comb(n + 2, 3)


def rank_for(k: int) -> int:
    """Largest n with ``C(n+2, 3) <= k``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    # integer cube-root estimate, then exact correction against the inequality
    n = max(1, round((6 * k) ** (1 / 3)) - 1)
    while tetra(n) > k:
        n -= 1
    while tetra(n + 1) <= k:
        n += 1
    return n


def nu(m: int) -> Permutation:
    if not 0 <= m <= 10:
        raise OutOfTable(f"nu is defined on 0..10, got {m}")
    return Permutation._trusted(NU[m])


def eta(k: int) -> Permutation:
    if k in _SMALL:
        return Permutation._trusted(_SMALL[k])
    if 20 <= k <= 30:
        return nu(k - tetra(4))
    raise NotAchievable(f"no table entry for k={k}")


def _zeta_values(m: int, n: int) -> list[int]:
    # Unrolled recursion: each level above 4 places its smallest value at the
    # right end (skew branch) or left end (direct branch) of the open window.
    out = [0] * n
    left, right, low = 0, n - 1, 1
    while n > 4:
        if m <= comb(n, 3):
            out[right] = low
            right -= 1
        else:
            m -= comb(n, 2)
            out[left] = low
            left += 1
        low += 1
        n -= 1
    shift = low - 1
    for i, v in enumerate(NU[m]):
        out[left + i] = v + shift
    return out


def zeta(m: int, n: int) -> Permutation:
    """A permutation of rank n >= 4 with non-inversion sum m."""
    if n < 4:
        raise RankTooSmall(f"zeta needs n >= 4, got {n}")
    if not 0 <= m <= comb(n + 1, 3):
        raise MOutOfRange(f"m must lie in 0..{comb(n + 1, 3)}, got {m}")
    return Permutation._trusted(_zeta_values(m, n))


def construct(k: int) -> Permutation:
    """A permutation pi with ``1 . pi = k``; the result is checked before returning."""
    if k < 1:
        raise NotAchievable(f"k must be positive, got {k}")
    if k in EXCLUDED:
        raise NotAchievable(f"{k} is not achievable")
    if k < 35:
        pi = eta(k)
    else:
        n = rank_for(k)
        pi = zeta(k - tetra(n), n)
    got = sum(i * v for i, v in enumerate(pi, start=1))
    if got != k:
        raise AssertionError(f"construct({k}) produced {pi} with dot product {got}")
    return pi


def qualifying_ranks(k: int) -> list[int]:
    """Ranks n whose dot-product range ``[C(n+2,3), C(n+2,3)+C(n+1,3)]`` holds k."""
    return [n for n in range(1, rank_for(k) + 1)
            if tetra(n) <= k <= tetra(n) + comb(n + 1, 3)]


@lru_cache(maxsize=None)
def _dot_histogram(n: int) -> Counter:
    ident = identity(n)
    return Counter(dot(ident, t) for t in iter_tuples(n, cap=n))


def count_with_cosine(k: int, max_rank: int | None = None) -> int:
    """Number of permutations of any rank whose dot product with the identity is k."""
    if k < 1:
        return 0
    max_rank = enumeration_cap() if max_rank is None else max_rank
    ranks = qualifying_ranks(k)
    too_big = [n for n in ranks if n > max_rank]
    if too_big:
        raise RankCapExceeded(
            f"k={k} needs rank {too_big[-1]} but max_rank is {max_rank}"
        )
    return sum(_dot_histogram(n)[k] for n in ranks)


def odd_parity_witness(k: int, max_rank: int | None = None) -> Permutation | None:
    """Exploratory: some pi with ``1 . pi = k`` having an even number of odd
    values in odd positions, searched by exhaustion; None if there is none."""
    max_rank = enumeration_cap() if max_rank is None else max_rank
    for n in qualifying_ranks(k):
        if n > max_rank:
            raise RankCapExceeded(f"k={k} needs rank {n} but max_rank is {max_rank}")
        for t in iter_tuples(n, cap=n):
            if sum(i * v for i, v in enumerate(t, start=1)) != k:
                continue
            if sum(1 for v in t[::2] if v % 2) % 2 == 0:
                return Permutation._trusted(t)
    return None
