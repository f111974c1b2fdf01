"""Invariant suites.

Per-permutation properties live in :data:`PERM_PROPERTIES` as functions that
return ``None`` on success or ``(expected, actual)`` on failure, so they can
be run exhaustively or on random samples.  Sweeps over parameters
(distributions, constructions) are separate checks.  Every check produces a
:class:`VerificationReport`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable

from . import cosine as cos
from . import distributions as dist
from . import meshpatterns as mp
from .permutation import (
    Permutation,
    compose,
    direct_sum,
    dot,
    enumerate_permutations,
    identity,
    iter_tuples,
    skew_sum,
)
from .polynomials import eulerian, nabla, q_binomial, q_factorial, IntPolynomial
from . import statistics as st
from .statistics import StatisticSpec


@dataclass
class VerificationReport:
    suite: str
    check: str
    range: str
    status: str = "pass"
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "range": self.range,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def _fail(report: VerificationReport, where, expected, actual) -> VerificationReport:
    report.status = "fail"
    report.counterexample = {
        "input": str(where),
        "expected": _show(expected),
        "actual": _show(actual),
    }
    return report


def _show(value):
    if isinstance(value, IntPolynomial):
        return value.pretty()
    if isinstance(value, tuple):
        return list(value)
    return value if isinstance(value, (int, str, bool, list, type(None))) else str(value)


# -- per-permutation properties ----------------------------------------------

def _cmp(expected, actual):
    return None if expected == actual else (expected, actual)


def _symmetry_involution(pi):
    for kind in ("reverse", "complement", "inverse"):
        twice = getattr(getattr(pi, kind)(), kind)()
        if twice != pi:
            return (tuple(pi), tuple(twice))
    return None


def _inverse_composes(pi):
    return _cmp(identity(len(pi)), compose(pi, pi.inverse()))


def _tetrahedral(pi):
    return _cmp(comb(len(pi) + 1, 3), st.invsum(pi) + st.ninvsum(pi))


def _ninvsum_symmetries(pi):
    s = st.ninvsum(pi)
    got = (st.ninvsum(pi.inverse()), st.ninvsum(pi.reverse()), st.ninvsum(pi.complement()))
    inv_s = st.invsum(pi)
    return _cmp((s, inv_s, inv_s), got)


def _cosine_theorem(pi):
    return _cmp(comb(len(pi) + 2, 3) + st.ninvsum(pi), st.cosine(pi))


def _zone_sum(pi):
    return _cmp(st.ninvsum(pi), sum(st.zone_vector(pi, "ninv")))


def _zone_complementary(pi):
    n = len(pi)
    both = tuple(a + b for a, b in zip(st.zone_vector(pi, "inv"), st.zone_vector(pi, "ninv")))
    return _cmp(tuple(k * (n - k) for k in range(1, n)), both)


def _zone_symmetries(pi):
    izcv = st.zone_vector(pi, "inv")
    got = (st.zone_vector(pi.complement(), "ninv"), st.zone_vector(pi.reverse(), "ninv"))
    return _cmp((izcv, izcv[::-1]), got)


def _reconstruction(pi):
    v = st.zone_vector(pi, "ninv", augmented=True)
    return _cmp(tuple(pi), tuple(st.from_augmented_ninv_zone_vector(v)))


def _insertion(pi):
    n = len(pi)
    a = st.zone_vector(pi, "ninv", augmented=True)
    for k in range(n + 1):
        want = tuple(a[j] + j for j in range(k + 1)) + tuple(a[k:])
        got = st.zone_vector(st.insert_max(pi, k), "ninv", augmented=True)
        if want != got:
            return ((k, want), (k, got))
    if st.insert_max(pi, 0) != skew_sum((1,), pi):
        return (tuple(skew_sum((1,), pi)), tuple(st.insert_max(pi, 0)))
    return None


def _kstep_sums(pi):
    n = len(pi)
    counts = [st.inv_k(pi, k) for k in range(1, n)]
    want = (st.inv(pi), st.invsum(pi), st.des(pi), st.inv(pi))
    got = (sum(counts), sum(k * c for k, c in enumerate(counts, start=1)),
           st.inv_le_k(pi, 1), st.inv_le_k(pi, max(n - 1, 1)))
    return _cmp(want, got)


def _k1k2_sum(pi):
    n = len(pi)
    total = sum(st.inv_k1k2(pi, k1, k2) for k1 in range(1, n) for k2 in range(1, n))
    return _cmp(st.inv(pi), total)


def _certified_le(pi, k):
    return sum(st.certified_ninv_k(pi, j) for j in range(2, k + 1))


def _ge_k_oracle(pi, k):
    # (>= k)-step inversions plus non-inversions (a, b) with some a < c <= b - k, pi(c) > pi(b)
    n = len(pi)
    total = 0
    for a in range(n):
        for b in range(a + k, n):
            if pi[a] > pi[b]:
                total += 1
            elif any(pi[c] > pi[b] for c in range(a + 1, b - k + 1)):
                total += 1
    return total


def _lbsum_identities(pi):
    n = len(pi)
    want = [st.inv(pi) + _certified_le(pi, n)]
    got = [st.lbsum(pi, "base")]
    for k in range(1, n):
        want += [st.inv_k(pi, k), st.inv_le_k(pi, k) + _certified_le(pi, k), _ge_k_oracle(pi, k)]
        got += [st.lbsum(pi, "eq_k", k), st.lbsum(pi, "le_k", k), st.lbsum(pi, "ge_k", k)]
    return _cmp(tuple(want), tuple(got))


def _ipcni_zero(pi):
    n = len(pi)
    for k in range(1, n + 1):
        zero = st.ipcni_k(pi, k) == 0
        shaped = tuple(pi[k:]) == tuple(range(k + 1, n + 1))
        if zero != shaped:
            return ((k, shaped), (k, zero))
    return None


def _run_lengths(pi):
    n = len(pi)
    for k in range(1, n + 1):
        runs = st.k_step_runs(pi, k)
        want = tuple((n - i) // k + 1 for i in range(1, k + 1))
        got = tuple(len(r) for r in runs)
        if want != got or sum(got) != n:
            return ((k, want), (k, got))
    return None


PERM_PROPERTIES: dict[str, Callable] = {
    "symmetry_involution": _symmetry_involution,
    "inverse_composition": _inverse_composes,
    "tetrahedral_split": _tetrahedral,
    "ninvsum_symmetries": _ninvsum_symmetries,
    "cosine_theorem": _cosine_theorem,
    "zone_sum_is_ninvsum": _zone_sum,
    "zone_complementary": _zone_complementary,
    "zone_symmetries": _zone_symmetries,
    "reconstruction_round_trip": _reconstruction,
    "insertion_lemma": _insertion,
    "kstep_sums": _kstep_sums,
    "k1k2_sum_is_inv": _k1k2_sum,
    "lbsum_identities": _lbsum_identities,
    "ipcni_zero_shape": _ipcni_zero,
    "run_lengths": _run_lengths,
}

# properties whose own statement is bounded tighter than the suite default
_PROPERTY_CAPS = {
    "insertion_lemma": 7,
    "kstep_sums": 7,
    "k1k2_sum_is_inv": 7,
    "lbsum_identities": 7,
    "ipcni_zero_shape": 7,
}


def check_property(suite: str, name: str, perms: Iterable[Permutation],
                   range_desc: str) -> VerificationReport:
    report = VerificationReport(suite, name, range_desc)
    fn = PERM_PROPERTIES[name]
    for pi in perms:
        bad = fn(pi)
        if bad is not None:
            return _fail(report, pi, *bad)
    return report


def exhaustive(max_n: int) -> Iterable[Permutation]:
    for n in range(1, max_n + 1):
        yield from enumerate_permutations(n, cap=max_n)


def sampled(n: int, count: int, seed: int = 0) -> Iterable[Permutation]:
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    for _ in range(count):
        rng.shuffle(base)
        yield Permutation._trusted(base)


# -- sweeps ------------------------------------------------------------------

def _sweep(suite: str, name: str, range_desc: str, cases) -> VerificationReport:
    """``cases`` yields ``(input, expected, actual)``."""
    report = VerificationReport(suite, name, range_desc)
    for where, expected, actual in cases:
        if expected != actual:
            return _fail(report, where, expected, actual)
    return report


def _permutation_checks(max_n: int) -> list[VerificationReport]:
    n8 = min(max_n, 8)
    reports = [
        check_property("permutation", name, exhaustive(n8), f"n<={n8}")
        for name in ("symmetry_involution", "inverse_composition")
    ]

    def lex():
        for n in range(1, max_n + 1):
            items = list(iter_tuples(n, cap=max_n))
            yield n, (factorial(n), True), (len(set(items)), items == sorted(items))

    reports.append(_sweep("permutation", "enumeration_lex_count", f"n<={max_n}", lex()))

    def pairs_of(limit):
        for n in range(1, limit + 1):
            perms = list(enumerate_permutations(n))
            for p in perms:
                for r in perms:
                    yield p, r

    n5 = min(max_n, 5)
    reports.append(_sweep("permutation", "dot_symmetric", f"n<={n5}",
                          ((f"{p} . {r}", dot(p, r), dot(r, p)) for p, r in pairs_of(n5))))

    def sums():
        for a in range(1, 5):
            for b in range(1, 5):
                for p in enumerate_permutations(a):
                    for s in enumerate_permutations(b):
                        yield ((str(p), str(s)), (a + b, a + b),
                               (len(direct_sum(p, s)), len(skew_sum(p, s))))

    reports.append(_sweep("permutation", "sum_ranks", "ranks<=4", sums()))
    return reports


def _statistics_checks(max_n: int) -> list[VerificationReport]:
    reports = []
    for name in PERM_PROPERTIES:
        if name in ("symmetry_involution", "inverse_composition"):
            continue
        cap = min(max_n, _PROPERTY_CAPS.get(name, 8))
        reports.append(check_property("statistics", name, exhaustive(cap), f"n<={cap}"))

    n6 = min(max_n, 6)

    def corollary():
        for n in range(1, n6 + 1):
            perms = list(enumerate_permutations(n))
            base = comb(n + 2, 3)
            for p in perms:
                for r in perms:
                    yield (f"{p} o {r}", dot(p, r.inverse()) - base, st.ninvsum(compose(p, r)))

    reports.append(_sweep("statistics", "composition_corollary", f"n<={n6}", corollary()))
    return reports


def _polynomial_checks(max_n: int) -> list[VerificationReport]:
    n8 = min(max_n, 8)
    des_inv = {n: dist.brute_multi({"des": st.des, "inv": st.inv}, n, cap=n) for n in range(1, n8 + 1)}
    reports = [
        _sweep("polynomials", "eulerian_vs_brute", f"n<={n8}",
               ((n, des_inv[n]["des"], eulerian(n)) for n in des_inv)),
        _sweep("polynomials", "q_factorial_vs_brute", f"n<={n8}",
               ((n, des_inv[n]["inv"], q_factorial(n)) for n in des_inv)),
    ]

    def qbin():
        for n in range(0, 13):
            for k in range(0, n + 1):
                q = q_binomial(n, k)
                yield ((n, k), (q_binomial(n, n - k), True, comb(n, k), k * (n - k)),
                       (q, q.is_palindromic(), q(1), q.degree))

    reports.append(_sweep("polynomials", "q_binomial_shape", "n<=12", qbin()))

    def nab():
        for k in range(1, 9):
            xk = IntPolynomial.monomial(k)
            want = IntPolynomial.from_counts({2 * k - j: j + 1 for j in range(k + 1)})
            yield k, want, xk * nabla(k, xk)

    reports.append(_sweep("polynomials", "nabla_identity", "k<=8", nab()))
    return reports


def _step_tables(n: int) -> dict:
    fns = {}
    for k in range(1, n + 1):
        fns[("inv_k", k)] = StatisticSpec("inv_k", k=k).function()
        fns[("ninv_k", k)] = StatisticSpec("ninv_k", k=k).function()
        fns[("inv_le_k", k)] = StatisticSpec("inv_le_k", k=k).function()
        fns[("ipcni_k", k)] = StatisticSpec("ipcni_k", k=k).function()
        fns[("inv_k_values", k)] = _value_gap(k)
    return dist.brute_multi(fns, n, cap=n)


class _value_gap:
    # k-step inversions measured on values, i.e. on the inverse permutation
    def __init__(self, k):
        self.k = k

    def __call__(self, t):
        pos = [0] * len(t)
        for i, v in enumerate(t):
            pos[v - 1] = i
        k = self.k
        return sum(1 for v in range(len(t) - k) if pos[v] > pos[v + k])


def _distribution_checks(max_n: int) -> list[VerificationReport]:
    n8 = min(max_n, 8)
    n7 = min(max_n, 7)
    tables = {n: _step_tables(n) for n in range(1, n8 + 1)}
    N = {n: dist.dist_brute(StatisticSpec("ninvsum"), n, cap=n) for n in range(1, n8 + 1)}

    def h_closed():
        for n, t in tables.items():
            for k in range(1, n + 1):
                yield (n, k), t[("inv_k", k)], dist.H_closed(n, k)

    def h_ninv():
        for n, t in tables.items():
            for k in range(1, n + 1):
                yield (n, k), t[("inv_k", k)], t[("ninv_k", k)]

    def h_values():
        for n, t in tables.items():
            for k in range(1, n + 1):
                yield (n, k), t[("inv_k", k)], t[("inv_k_values", k)]

    def i_nk0():
        for n, t in tables.items():
            for k in range(1, n + 1):
                yield (n, k), t[("inv_k", k)].coefficient(0), dist.I_nk0(n, k)

    def n_rec():
        for n in range(1, n8 + 1):
            yield n, N[n], dist.N_recurrence(n, cap=n)

    def n_shape():
        for n in range(1, n8 + 1):
            yield n, (True, comb(n + 1, 3), factorial(n)), (N[n].is_palindromic(), N[n].degree, N[n](1))

    def j_special():
        for n, t in tables.items():
            yield (n, "k=1"), t[("inv_le_k", 1)], dist.J_special(n, "k_eq_1")
            yield (n, "k=n-1"), t[("inv_le_k", max(n - 1, 1))], dist.J_special(n, "k_eq_n_minus_1")
            if n >= 3:
                yield (n, "k=n-2"), t[("inv_le_k", n - 2)], dist.J_special(n, "k_eq_n_minus_2")

    def j_degree():
        for n in range(2, n7 + 1):
            for k in range(1, n):
                yield (n - 1, k), tables[n][("inv_le_k", k)].degree, dist.J_degree(n - 1, k)

    def k_special():
        for n, t in tables.items():
            if n >= 2:
                yield (n, "k=n-1"), t[("ipcni_k", n - 1)], dist.K_special(n, "k_eq_n_minus_1")
            if n >= 4:
                yield (n, "k=n-2"), t[("ipcni_k", n - 2)], dist.K_special(n, "k_eq_n_minus_2")
            for k in range(1, n + 1):
                yield (n, k, "const"), t[("ipcni_k", k)].coefficient(0), dist.K_special(n, "constant_term", k)

    def mass():
        for n, t in tables.items():
            for key, p in t.items():
                yield (n, key), factorial(n), p(1)

    reports = [
        _sweep("distributions", "H_closed_vs_brute", f"1<=k<=n<={n8}", h_closed()),
        _sweep("distributions", "I_nk0_constant_term", f"1<=k<=n<={n8}", i_nk0()),
        _sweep("distributions", "inv_k_equals_ninv_k", f"n<={n8}", h_ninv()),
        _sweep("distributions", "value_gap_equals_position_gap", f"n<={n8}", h_values()),
        _sweep("distributions", "N_recurrence_vs_brute", f"n<={n8}", n_rec()),
        _sweep("distributions", "N_palindromic_degree", f"n<={n8}", n_shape()),
        _sweep("distributions", "J_special_vs_brute", f"n<={n8}", j_special()),
        _sweep("distributions", "J_degree_vs_brute", f"n<={n7}", j_degree()),
        _sweep("distributions", "K_special_vs_brute", f"n<={n8}", k_special()),
        _sweep("distributions", "total_mass", f"n<={n8}", mass()),
    ]
    reports += _regime_checks(n8)
    reports.append(_zcv_check(n8))
    return reports


def _regime_checks(n_max: int) -> list[VerificationReport]:
    def k1k2():
        for n in range(2, n_max + 1):
            for k1 in range(n // 2 + 1, n):
                for k2 in range(n // 2 + 1, n):
                    p = dist.dist_brute(StatisticSpec("inv_k1k2", k1=k1, k2=k2), n, cap=n)
                    yield (n, k1, k2), dist.H_k1k2_extremal(n, k1, k2), (p.degree, p.leading)

    def l_lead():
        for n in range(2, n_max + 1):
            for d in (2, 3):
                if d > n:
                    continue
                for k in range(n // 2 + 1, n):
                    p = dist.dist_brute(StatisticSpec("modinv_dk", d=d, k=k), n, cap=n)
                    yield (n, d, k), dist.L_leading(n, d, k), (p.degree, p.leading)

    def l_n2():
        for n in range(2, n_max + 1):
            p = dist.dist_brute(StatisticSpec("modinv_dk", d=2, k=n - 1), n, cap=n)
            yield n, p, dist.L_n2_nminus1(n)

    return [
        _sweep("distributions", "H_k1k2_extremal_vs_brute", f"n<={n_max}", k1k2()),
        _sweep("distributions", "L_leading_vs_brute", f"n<={n_max}, d in {{2,3}}", l_lead()),
        _sweep("distributions", "L_n2_nminus1_vs_brute", f"2<=n<={n_max}", l_n2()),
    ]


def _zcv_check(n_max: int) -> VerificationReport:
    def cases():
        for n in range(2, n_max + 1):
            counts = {(kind, k): {} for kind in ("inv", "ninv") for k in range(1, n)}
            for t in iter_tuples(n, cap=n):
                for kind in ("inv", "ninv"):
                    for k, z in enumerate(st.zone_vector(t, kind), start=1):
                        c = counts[(kind, k)]
                        c[z] = c.get(z, 0) + 1
            for (kind, k), c in counts.items():
                yield (n, k, kind), IntPolynomial.from_counts(c), dist.zcv_coordinate_dist(n, k)

    return _sweep("distributions", "zcv_coordinate_dist_vs_brute", f"1<=k<n<={n_max}", cases())


def _cosine_checks(max_n: int, construct_limit: int = 100_000) -> list[VerificationReport]:
    def constructed():
        for k in range(1, construct_limit + 1):
            if k in cos.EXCLUDED:
                continue
            pi = cos.construct(k)
            yield k, k, dot(identity(len(pi)), pi)

    def refused():
        for k in range(1, 100):
            try:
                cos.construct(k)
                refuses = False
            except cos.NotAchievable:
                refuses = True
            yield k, k in cos.EXCLUDED, refuses

    n9 = 9

    def zetas():
        for n in range(4, n9 + 1):
            for m in range(comb(n + 1, 3) + 1):
                yield (m, n), m, st.ninvsum(cos.zeta(m, n))

    def pascal():
        for n in range(6, 41):
            yield n, True, comb(n + 1, 3) + comb(n, 3) >= comb(n + 2, 3) - 1

    def counts():
        for k in range(1, 61):
            yield k, k in cos.EXCLUDED, cos.count_with_cosine(k, max_rank=6) == 0

    def ranks():
        for k in range(1, 1_000_001):
            n = cos.rank_for(k)
            if not cos.tetra(n) <= k < cos.tetra(n + 1):
                yield k, "C(n+2,3) <= k < C(n+3,3)", n

    def nus():
        for m in range(11):
            yield m, m, st.ninvsum(cos.nu(m))

    return [
        _sweep("cosine", "construct_verified", f"k<={construct_limit}", constructed()),
        _sweep("cosine", "construct_refuses_excluded", "k<100", refused()),
        _sweep("cosine", "nu_table", "m<=10", nus()),
        _sweep("cosine", "zeta_hits_every_m", f"4<=n<={n9}", zetas()),
        _sweep("cosine", "pascal_lemma", "6<=n<=40", pascal()),
        _sweep("cosine", "count_zero_iff_excluded", "k<=60", counts()),
        _sweep("cosine", "rank_for_inequality", "k<=10^6", ranks()),
    ]


def _mesh_cases(n_max: int):
    for n in range(1, n_max + 1):
        for pi in enumerate_permutations(n, cap=n_max):
            for k in range(1, n):
                yield ("kstep_inv", pi, k), st.inv_k(pi, k), mp.occurrences(mp.builtin("kstep_inv", k=k), pi)
                yield ("le_kstep_inv", pi, k), st.inv_le_k(pi, k), mp.occurrences(mp.builtin("le_kstep_inv", k=k), pi)
                yield ("zcv_coord", pi, k), st.zone_vector(pi, "inv")[k - 1], mp.occurrences(
                    mp.builtin("zcv_coord", k=k, n=n), pi)
                for k2 in range(1, n):
                    yield ("k1k2_inv", pi, k, k2), st.inv_k1k2(pi, k, k2), mp.occurrences(
                        mp.builtin("k1k2_inv", k1=k, k2=k2), pi)
                for d in (2, 3):
                    yield ("modinv_top", pi, d, k), st.modinv_dk(pi, d, k), mp.modinv_by_patterns(pi, d, k)
                if k >= 2:
                    pat = mp.builtin("certified_kstep", k=k)
                    found = list(mp.matches(pat, pi))
                    ends = {(m[0], m[2]) for m in found}
                    yield ("certified_kstep", pi, k), (st.certified_ninv_k(pi, k), len(found)), (
                        len(found), len(ends))
            counts = [mp.occurrences(mp.builtin("kstep_inv", k=k), pi) for k in range(1, n)]
            yield ("linear_combination", pi), (st.inv(pi), st.invsum(pi)), (
                sum(counts), sum(k * c for k, c in enumerate(counts, start=1)))


def _mesh_checks(max_n: int) -> list[VerificationReport]:
    n7 = min(max_n, 7)
    return [_sweep("meshpatterns", "builtin_pattern_identities", f"n<={n7}", _mesh_cases(n7))]


SUITES: dict[str, Callable[[int], list[VerificationReport]]] = {
    "permutation": _permutation_checks,
    "statistics": _statistics_checks,
    "polynomials": _polynomial_checks,
    "distributions": _distribution_checks,
    "cosine": _cosine_checks,
    "meshpatterns": _mesh_checks,
}


def run_suite(name: str, max_n: int = 8) -> list[VerificationReport]:
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(max_n))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_n)
