"""Distribution polynomials of statistics over S_n.

``dist_brute`` tallies a statistic over every permutation.  The remaining
functions are closed forms and recurrences that can be checked against it.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .errors import (
    BadParams,
    KOutOfRange,
    NoClosedForm,
    OutOfRegime,
    RankTooSmall,
)
from .permutation import check_rank, enumeration_cap, iter_tuples, split_range
from .polynomials import ONE, X, IntPolynomial, eulerian, nabla, q_binomial, q_factorial
from .statistics import StatisticSpec, ninvsum, zone_vector

METHODS = ("brute", "closed", "recurrence", "auto")


# -- brute force -------------------------------------------------------------

def _tally(fn, n: int, start: int, stop: int, cap: int | None) -> Counter:
    counts = Counter()
    for t in iter_tuples(n, start, stop, cap):
        counts[fn(t)] += 1
    return counts


def dist_brute(stat: StatisticSpec, n: int, jobs: int = 1,
               cap: int | None = None) -> IntPolynomial:
    """``sum over S_n of x**stat(pi)``, by exhaustive enumeration.

    With ``jobs > 1`` the lexicographic index range is split across worker
    processes, each keeping its own tally; the merged result does not depend
    on the number of workers.
    """
    check_rank(n, cap)
    fn = stat.function()
    total = factorial(n)
    if jobs <= 1 or total < 5040:
        return IntPolynomial.from_counts(_tally(fn, n, 0, total, cap))
    merged = Counter()
    ranges = split_range(total, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_tally, fn, n, lo, hi, cap) for lo, hi in ranges]
        for fut in futures:
            merged.update(fut.result())
    return IntPolynomial.from_counts(merged)


def brute_multi(fns: dict, n: int, cap: int | None = None) -> dict:
    """Several distributions from a single sweep of S_n (keys are kept)."""
    check_rank(n, cap)
    counts = {key: Counter() for key in fns}
    items = list(fns.items())
    for t in iter_tuples(n, cap=cap):
        for key, fn in items:
            counts[key][fn(t)] += 1
    return {key: IntPolynomial.from_counts(c) for key, c in counts.items()}


# -- non-inversion sum -------------------------------------------------------

def N_recurrence(n: int, cap: int | None = None) -> IntPolynomial:
    """``N_n`` assembled from S_{n-1} by inserting the new maximum in each slot."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if n == 1:
        return ONE
    m = n - 1
    check_rank(m, cap)
    counts = Counter()
    for t in iter_tuples(m, cap=cap):
        base = ninvsum(t)
        a = zone_vector(t, "ninv", augmented=True)
        for k in range(m + 1):
            counts[comb(k + 1, 2) + a[k] + base] += 1
    return IntPolynomial.from_counts(counts)


# -- k-step inversions -------------------------------------------------------

def run_lengths(n: int, k: int) -> list[int]:
    return [(n - i) // k + 1 for i in range(1, k + 1)]


def I_nk0(n: int, k: int) -> int:
    """Number of permutations of rank n with no k-step inversion."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k must lie in 1..{n}, got {k}")
    lam = run_lengths(n, k)
    out = 1
    used = 0
    for j in range(k - 1):
        out *= comb(n - used, lam[j])
        used += lam[j]
    return out


def H_closed(n: int, k: int) -> IntPolynomial:
    """Distribution of k-step inversions as a product of Eulerian polynomials."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if k < 1:
        raise KOutOfRange(f"k must be >= 1, got {k}")
    if k > n:
        return IntPolynomial((factorial(n),))
    s = n // k + 1
    t = n % k
    return (eulerian(s) ** t * eulerian(s - 1) ** (k - t)).scale(I_nk0(n, k))


def H_k1k2_extremal(n: int, k1: int, k2: int) -> tuple[int, int]:
    """Degree and leading coefficient of the (k1, k2)-step distribution."""
    if not (n < 2 * k1 and k1 < n and n < 2 * k2 and k2 < n):
        raise OutOfRegime(f"need n/2 < k1, k2 < n; got n={n}, k1={k1}, k2={k2}")
    ell = min(n - k1, n - k2)
    lead = factorial(n - 2 * ell) * factorial(ell) * comb(n - k1, ell) * comb(n - k2, ell)
    return ell, lead


# -- (<= k)-step inversions --------------------------------------------------

def J_special(n: int, which: str) -> IntPolynomial:
    """Closed forms for max step 1, n-2 and n-1.

    The n-2 case uses ``[n-2]_x!`` as its left factor.
    """
    if which == "k_eq_1":
        if n < 1:
            raise RankTooSmall(f"n must be >= 1, got {n}")
        return eulerian(n)
    if which == "k_eq_n_minus_1":
        if n < 1:
            raise RankTooSmall(f"n must be >= 1, got {n}")
        return q_factorial(n)
    if which == "k_eq_n_minus_2":
        if n < 3:
            raise RankTooSmall(f"the n-2 case needs n >= 3, got {n}")
        k = n - 2
        xk = IntPolynomial.monomial(k)
        inner = (X * IntPolynomial([1] * (k + 1))).derivative() + xk * nabla(k, xk)
        return q_factorial(n - 2) * inner
    raise BadParams(f"unknown J case {which!r}")


def J_degree(n: int, k: int) -> int:
    """Degree of the (<= k)-step distribution at rank n + 1."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k must lie in 1..{n}, got {k}")
    return k * (2 * n - k + 1) // 2


# -- inversion tops divisible by d -------------------------------------------

def L_leading(n: int, d: int, k: int) -> tuple[int, int]:
    if not (n < 2 * k and k < n and 2 <= d <= n):
        raise OutOfRegime(f"need n/2 < k < n and 2 <= d <= n; got n={n}, d={d}, k={k}")
    tops = n // d
    ell = min(n - k, tops)
    total = 0
    for idx in combinations(range(1, tops + 1), ell):
        prod = 1
        for j, i in enumerate(idx, start=1):
            prod *= d * i - 2 * j + 1
        total += prod
    lead = factorial(n - 2 * ell) * factorial(ell) * comb(n - k, ell) * total
    return ell, lead


def L_n2_nminus1(n: int) -> IntPolynomial:
    if n < 2:
        raise RankTooSmall(f"n must be >= 2, got {n}")
    h = (n // 2) ** 2
    return IntPolynomial((n * (n - 1) - h, h)).scale(factorial(n - 2))


# -- k-step inversions plus certified non-inversions -------------------------

def K_special(n: int, which: str, k: int | None = None):
    """``k_eq_n_minus_1`` / ``k_eq_n_minus_2`` polynomials, or the constant term k!."""
    if which == "k_eq_n_minus_1":
        if n < 2:
            raise RankTooSmall(f"n must be >= 2, got {n}")
        return IntPolynomial((1, n - 1)).scale(factorial(n - 1))
    if which == "k_eq_n_minus_2":
        if n < 4:
            raise RankTooSmall(f"n must be >= 4, got {n}")
        return IntPolynomial((1, 2 * (n - 1), n * n - 3 * n + 1)).scale(factorial(n - 2))
    if which == "constant_term":
        if k is None or not 1 <= k <= n:
            raise KOutOfRange(f"constant term needs 1 <= k <= n, got k={k}")
        return factorial(k)
    raise BadParams(f"unknown K case {which!r}")


# -- zone-crossing coordinates -----------------------------------------------

def zcv_coordinate_dist(n: int, k: int) -> IntPolynomial:
    """``sum over S_n of q**z_k(pi)`` = ``k!(n-k)! [n choose k]_q``."""
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k must lie in 1..{n - 1}, got {k}")
    return q_binomial(n, k).scale(factorial(k) * factorial(n - k))


def zcv_coordinate_brute(n: int, k: int, kind: str = "ninv",
                         cap: int | None = None) -> IntPolynomial:
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k must lie in 1..{n - 1}, got {k}")
    check_rank(n, cap)
    counts = Counter(zone_vector(t, kind)[k - 1] for t in iter_tuples(n, cap=cap))
    return IntPolynomial.from_counts(counts)


# -- dispatch ----------------------------------------------------------------

@dataclass(frozen=True)
class DistributionRequest:
    stat: StatisticSpec
    n: int
    method: str = "auto"

    def __post_init__(self):
        if self.method not in METHODS:
            raise BadParams(f"unknown method {self.method!r}")
        if self.n < 1:
            raise BadParams(f"n must be >= 1, got {self.n}")


def closed_form(stat: StatisticSpec, n: int) -> IntPolynomial | None:
    """The closed form for (stat, n) when one is known, else None."""
    tag = stat.tag
    if tag in ("inv_k", "ninv_k"):
        return H_closed(n, stat.k)
    if tag == "inv_le_k":
        k = stat.k
        if k >= n - 1:
            return q_factorial(n)
        if k == 1:
            return eulerian(n)
        if k == n - 2:
            return J_special(n, "k_eq_n_minus_2")
        return None
    if tag == "ipcni_k":
        k = stat.k
        if k >= n:
            return IntPolynomial((factorial(n),))
        if k == n - 1 and n >= 2:
            return K_special(n, "k_eq_n_minus_1")
        if k == n - 2 and n >= 4:
            return K_special(n, "k_eq_n_minus_2")
        return None
    if tag == "modinv_dk":
        if stat.d == 2 and stat.k == n - 1 and n >= 2:
            return L_n2_nminus1(n)
        return None
    return None


def distribution(req: DistributionRequest, jobs: int = 1, cross_check: bool = False,
                 cap: int | None = None) -> IntPolynomial:
    """Resolve a request; ``auto`` prefers closed forms and falls back to brute force.

    With ``cross_check`` the non-brute answer is compared to brute force and a
    mismatch raises ``AssertionError``.
    """
    stat, n, method = req.stat, req.n, req.method
    result = None
    if method in ("closed", "auto"):
        result = closed_form(stat, n)
        if result is None and method == "closed":
            raise NoClosedForm(f"no closed form for {stat.label()} at n={n}")
    if method == "recurrence" or (method == "auto" and result is None
                                  and stat.tag == "ninvsum" and n - 1 <= _cap(cap)):
        if stat.tag != "ninvsum":
            raise NoClosedForm(f"no recurrence for {stat.label()}")
        result = N_recurrence(n, cap)
    if result is None:
        return dist_brute(stat, n, jobs, cap)
    if cross_check:
        brute = dist_brute(stat, n, jobs, cap)
        if brute != result:
            raise AssertionError(
                f"{stat.label()} n={n}: {method} gives {result.pretty()}, "
                f"brute force gives {brute.pretty()}"
            )
    return result


def _cap(cap: int | None) -> int:
    return enumeration_cap() if cap is None else cap


def total_mass_ok(p: IntPolynomial, n: int) -> bool:
    return p(1) == math.factorial(n)
