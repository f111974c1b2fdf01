"""Marked mesh patterns of length at most 3.

A pattern is drawn on a grid: matched points sit on column lines 1..p and
row lines 1..p, with 0 and p+1 as the borders.  Cell ``(i, j)`` is the open
box between column lines i, i+1 and row lines j, j+1.  A :class:`Region` is a
rectangle of cells; it constrains how many letters of the host permutation
(other than the matched ones) lie inside it.  A shaded cell is a region that
must stay empty.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BadParams, UnknownPattern
from .permutation import Permutation

_COMPARATORS = {"=": operator.eq, "<=": operator.le, ">=": operator.ge}


@dataclass(frozen=True)
class Region:
    """Cells ``x0 <= i < x1`` by ``y0 <= j < y1``."""

    x0: int
    y0: int
    x1: int
    y1: int

    @classmethod
    def column_band(cls, i: int, p: int) -> "Region":
        return cls(i, 0, i + 1, p + 1)

    @classmethod
    def row_band(cls, j: int, p: int) -> "Region":
        return cls(0, j, p + 1, j + 1)

    @classmethod
    def cell(cls, i: int, j: int) -> "Region":
        return cls(i, j, i + 1, j + 1)


@dataclass(frozen=True)
class Constraint:
    region: Region
    comparator: str
    bound: int

    def __post_init__(self):
        if self.comparator not in _COMPARATORS:
            raise BadParams(f"comparator must be one of {sorted(_COMPARATORS)}")
        if self.bound < 0:
            raise BadParams("bounds are nonnegative")


@dataclass(frozen=True)
class MarkedMeshPattern:
    base: Permutation
    shaded: frozenset = field(default_factory=frozenset)
    constraints: tuple = ()

    def __post_init__(self):
        p = len(self.base)
        if p > 3:
            raise BadParams("patterns longer than 3 are not supported")
        for (i, j) in self.shaded:
            if not (0 <= i <= p and 0 <= j <= p):
                raise BadParams(f"shaded cell {(i, j)} outside the {p}x{p} grid")
        for c in self.constraints:
            r = c.region
            if not (0 <= r.x0 < r.x1 <= p + 1 and 0 <= r.y0 < r.y1 <= p + 1):
                raise BadParams(f"region {r} outside the grid")

    def all_constraints(self) -> list[Constraint]:
        return [Constraint(Region.cell(i, j), "=", 0) for (i, j) in sorted(self.shaded)] + list(
            self.constraints
        )


def _region_count(pi: Sequence[int], cols: list[int], rows: list[int],
                  matched: set[int], r: Region) -> int:
    lo_c, hi_c = cols[r.x0], cols[r.x1]
    lo_v, hi_v = rows[r.y0], rows[r.y1]
    return sum(
        1 for c in range(lo_c + 1, hi_c)
        if c not in matched and lo_v < pi[c - 1] < hi_v
    )


def matches(pat: MarkedMeshPattern, pi: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield each occurrence as its tuple of 1-based positions."""
    p = len(pat.base)
    n = len(pi)
    checks = [(c.region, _COMPARATORS[c.comparator], c.bound) for c in pat.all_constraints()]
    for idx in combinations(range(1, n + 1), p):
        vals = [pi[i - 1] for i in idx]
        if any((vals[a] < vals[b]) != (pat.base[a] < pat.base[b])
               for a in range(p) for b in range(a + 1, p)):
            continue
        cols = [0, *idx, n + 1]
        rows = [0, *sorted(vals), n + 1]
        matched = set(idx)
        if all(cmp(_region_count(pi, cols, rows, matched, reg), bound)
               for reg, cmp, bound in checks):
            yield idx


def occurrences(pat: MarkedMeshPattern, pi: Sequence[int]) -> int:
    return sum(1 for _ in matches(pat, pi))


_P21 = Permutation((2, 1))
_P132 = Permutation((1, 3, 2))

BUILTINS = ("kstep_inv", "le_kstep_inv", "k1k2_inv", "zcv_coord", "modinv_top", "certified_kstep")


def _need(params: dict, *names: str) -> list[int]:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise BadParams(f"missing parameters: {', '.join(missing)}")
    return [params[n] for n in names]


def builtin(name: str, **params) -> MarkedMeshPattern:
    """Patterns whose occurrence counts reproduce the step statistics.

    ``modinv_top`` takes ``d, k, n, ell`` and matches k-step inversions whose
    top equals ``d * ell``; summing over ell >= 1 gives modinv_dk.
    """
    if name == "kstep_inv":
        (k,) = _need(params, "k")
        return MarkedMeshPattern(_P21, constraints=(Constraint(Region.column_band(1, 2), "=", k - 1),))
    if name == "le_kstep_inv":
        (k,) = _need(params, "k")
        return MarkedMeshPattern(_P21, constraints=(Constraint(Region.column_band(1, 2), "<=", k - 1),))
    if name == "k1k2_inv":
        k1, k2 = _need(params, "k1", "k2")
        return MarkedMeshPattern(_P21, constraints=(
            Constraint(Region.column_band(1, 2), "=", k1 - 1),
            Constraint(Region.row_band(1, 2), "=", k2 - 1),
        ))
    if name == "zcv_coord":
        k, n = _need(params, "k", "n")
        if not 1 <= k <= n - 1:
            raise BadParams(f"zone coordinate k must lie in 1..{n - 1}")
        return MarkedMeshPattern(_P21, constraints=(
            Constraint(Region.column_band(0, 2), "<=", k - 1),
            Constraint(Region.column_band(2, 2), "<=", n - k - 1),
        ))
    if name == "modinv_top":
        d, k, n, ell = _need(params, "d", "k", "n", "ell")
        if ell < 1 or d * ell > n:
            raise BadParams(f"need 1 <= ell and d*ell <= n, got d={d}, ell={ell}, n={n}")
        return MarkedMeshPattern(_P21, constraints=(
            Constraint(Region.column_band(1, 2), "=", k - 1),
            Constraint(Region.row_band(2, 2), "=", n - d * ell),
        ))
    if name == "certified_kstep":
        (k,) = _need(params, "k")
        if k < 2:
            raise BadParams("certified k-step patterns need k >= 2")
        return MarkedMeshPattern(
            _P132,
            shaded=frozenset({(1, 3), (2, 3)}),
            constraints=(Constraint(Region(1, 0, 3, 4), "=", k - 2),),
        )
    raise UnknownPattern(f"unknown pattern {name!r}")


def modinv_by_patterns(pi: Sequence[int], d: int, k: int) -> int:
    n = len(pi)
    return sum(
        occurrences(builtin("modinv_top", d=d, k=k, n=n, ell=ell), pi)
        for ell in range(1, n // d + 1)
    )
