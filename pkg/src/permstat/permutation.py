"""Permutations in one-line notation and exhaustive enumeration of S_n.

A :class:`Permutation` is a tuple holding ``pi(1), ..., pi(n)``.  Python
indexing stays 0-based (``p[0]`` is ``pi(1)``); calling the permutation,
``p(i)``, is the 1-based mathematical view.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEntries,
    EmptyInput,
    NotAPermutation,
    RankCapExceeded,
    RankMismatch,
    ZeroRank,
)

DEFAULT_MAX_RANK = 10
MAX_RANK_ENV = "PERMSTAT_MAX_RANK"


class Permutation(tuple):
    """An immutable permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        n = len(values)
        if n == 0:
            raise ZeroRank("a permutation has rank at least 1")
        if sorted(values) != list(range(1, n + 1)):
            raise NotAPermutation(f"{values} is not a rearrangement of 1..{n}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # skips validation; callers guarantee a rearrangement of 1..n
        return tuple.__new__(cls, values)

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def compact(self) -> str:
        """Digit-string form (``314562``); only unambiguous for rank <= 9."""
        if len(self) > 9:
            return str(self)
        return "".join(map(str, self))

    def reverse(self) -> "Permutation":
        return Permutation._trusted(self[::-1])

    def complement(self) -> "Permutation":
        n1 = len(self) + 1
        return Permutation._trusted(n1 - v for v in self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, v in enumerate(self, start=1):
            inv[v - 1] = pos
        return Permutation._trusted(inv)


def parse(text: str) -> Permutation:
    """Read ``"3 1 4 5 6 2"``, ``"3,1,4,5,6,2"`` or the compact ``"314562"``."""
    text = text.strip()
    if not text:
        raise EmptyInput("empty permutation text")
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        # a lone multi-digit token is read digit by digit, so entries must be <= 9
        tokens = list(tokens[0])
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise NotAPermutation(f"non-integer entry in {text!r}") from exc
    if any(v < 1 for v in values):
        raise NotAPermutation(f"entries must be positive in {text!r}")
    return Permutation(values)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ZeroRank(f"identity needs rank >= 1, got {n}")
    return Permutation._trusted(range(1, n + 1))


def symmetry(pi: Permutation, kind: str) -> Permutation:
    """Apply ``reverse``, ``complement`` or ``inverse``."""
    if kind == "reverse":
        return pi.reverse()
    if kind == "complement":
        return pi.complement()
    if kind == "inverse":
        return pi.inverse()
    raise ValueError(f"unknown symmetry {kind!r}")


def _same_rank(pi: Sequence[int], rho: Sequence[int]) -> None:
    if len(pi) != len(rho):
        raise RankMismatch(f"ranks differ: {len(pi)} vs {len(rho)}")


def compose(pi: Permutation, rho: Permutation) -> Permutation:
    """``(pi o rho)(k) = pi(rho(k))``."""
    _same_rank(pi, rho)
    return Permutation._trusted(pi[r - 1] for r in rho)


def direct_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    shift = len(pi)
    return Permutation._trusted(itertools.chain(pi, (s + shift for s in sigma)))


def skew_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    shift = len(sigma)
    return Permutation._trusted(itertools.chain((p + shift for p in pi), sigma))


def flatten(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct integers."""
    if len(set(values)) != len(values):
        raise DuplicateEntries(f"repeated entries in {tuple(values)}")
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for r, i in enumerate(order, start=1):
        out[i] = r
    return Permutation(out)


def dot(pi: Sequence[int], rho: Sequence[int]) -> int:
    _same_rank(pi, rho)
    return sum(a * b for a, b in zip(pi, rho))


def enumeration_cap() -> int:
    raw = os.environ.get(MAX_RANK_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_RANK
    return int(raw)


def check_rank(n: int, cap: int | None = None) -> None:
    if n < 1:
        raise ZeroRank(f"rank must be >= 1, got {n}")
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise RankCapExceeded(f"rank {n} exceeds the enumeration cap {cap}")


def _lex_block(prefix: tuple, rest: tuple, start: int, stop: int) -> Iterator[tuple]:
    # rest is sorted; its lexicographic block has len(rest)! members
    m = len(rest)
    size = math.factorial(m)
    if start <= 0 and stop >= size:
        for tail in itertools.permutations(rest):
            yield prefix + tail
        return
    sub = math.factorial(m - 1)
    for idx, head in enumerate(rest):
        lo = idx * sub
        hi = lo + sub
        if hi <= start:
            continue
        if lo >= stop:
            break
        yield from _lex_block(
            prefix + (head,), rest[:idx] + rest[idx + 1:], start - lo, stop - lo
        )


def iter_tuples(n: int, start: int = 0, stop: int | None = None,
                cap: int | None = None) -> Iterator[tuple]:
    """Plain tuples of S_n in lexicographic order, restricted to ranks ``[start, stop)``.

    Disjoint index ranges give disjoint sub-streams, which is how parallel
    consumers split the work.
    """
    check_rank(n, cap)
    total = math.factorial(n)
    stop = total if stop is None else min(stop, total)
    start = max(start, 0)
    if start >= stop:
        return iter(())
    return _lex_block((), tuple(range(1, n + 1)), start, stop)


def enumerate_permutations(n: int, start: int = 0, stop: int | None = None,
                           cap: int | None = None) -> Iterator[Permutation]:
    for t in iter_tuples(n, start, stop, cap):
        yield Permutation._trusted(t)


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[0, total)`` into at most ``parts`` contiguous, non-empty ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out
