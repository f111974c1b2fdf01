"""Per-permutation statistics: inversion refinements, sums, zone-crossing
vectors, k-step runs, left boundary vectors and certified non-inversions.

Every function accepts any sequence of the values ``pi(1), ..., pi(n)``
(a :class:`~permstat.permutation.Permutation` or a plain tuple), so the
brute-force engine can feed raw tuples without wrapping them.  Positions in
arguments and results are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, Sequence

from .errors import (
    BadParams,
    KOutOfRange,
    MissingParameterK,
    NotARealizableVector,
)
from .permutation import Permutation, flatten

Perm = Sequence[int]


# -- pair sets and sums ------------------------------------------------------

def pairs(pi: Perm, kind: str = "inversions") -> frozenset[tuple[int, int]]:
    """All position pairs ``a < b`` that are inversions or non-inversions."""
    if kind not in ("inversions", "non_inversions"):
        raise ValueError(f"unknown pair kind {kind!r}")
    want_inv = kind == "inversions"
    n = len(pi)
    return frozenset(
        (a + 1, b + 1)
        for a in range(n)
        for b in range(a + 1, n)
        if (pi[a] > pi[b]) == want_inv
    )


def inv(pi: Perm) -> int:
    n = len(pi)
    return sum(1 for a in range(n) for b in range(a + 1, n) if pi[a] > pi[b])


def des(pi: Perm) -> int:
    return sum(1 for a in range(len(pi) - 1) if pi[a] > pi[a + 1])


def invsum(pi: Perm) -> int:
    n = len(pi)
    return sum(b - a for a in range(n) for b in range(a + 1, n) if pi[a] > pi[b])


def ninvsum(pi: Perm) -> int:
    n = len(pi)
    return sum(b - a for a in range(n) for b in range(a + 1, n) if pi[a] < pi[b])


def cosine(pi: Perm) -> int:
    """Dot product with the identity of the same rank."""
    return sum(i * v for i, v in enumerate(pi, start=1))


# -- step-restricted counts --------------------------------------------------

def inv_k(pi: Perm, k: int) -> int:
    return sum(1 for a in range(len(pi) - k) if pi[a] > pi[a + k])


def ninv_k(pi: Perm, k: int) -> int:
    return sum(1 for a in range(len(pi) - k) if pi[a] < pi[a + k])


def inv_k1k2(pi: Perm, k1: int, k2: int) -> int:
    """Pairs at position gap ``k1`` whose value drops by exactly ``k2``."""
    return sum(1 for a in range(len(pi) - k1) if pi[a] - pi[a + k1] == k2)


def inv_le_k(pi: Perm, k: int) -> int:
    n = len(pi)
    return sum(
        1 for a in range(n) for b in range(a + 1, min(a + k, n - 1) + 1)
        if pi[a] > pi[b]
    )


def modinv_dk(pi: Perm, d: int, k: int) -> int:
    """k-step inversions whose top value ``pi(a)`` is divisible by ``d``."""
    return sum(
        1 for a in range(len(pi) - k)
        if pi[a] > pi[a + k] and pi[a] % d == 0
    )


def certified_ninv_k(pi: Perm, k: int) -> int:
    """Non-inversions at gap ``k`` whose interior maximum exceeds the right end.

    Counted once per endpoint pair.
    """
    count = 0
    for a in range(len(pi) - k):
        b = a + k
        if pi[a] < pi[b] and k >= 2 and max(pi[a + 1:b]) > pi[b]:
            count += 1
    return count


def ipcni_k(pi: Perm, k: int) -> int:
    return inv_k(pi, k) + certified_ninv_k(pi, k)


# -- left boundary vectors ---------------------------------------------------

LB_VARIANTS = ("base", "ge_k", "le_k", "eq_k")


def lb_vector(pi: Perm, variant: str = "base", k: int | None = None) -> tuple[int, ...]:
    """Left boundary vector and its ``ge_k``, ``le_k``, ``eq_k`` refinements.

    ``base``: coordinate j is the largest i < j with pi(i) > pi(j), or 0.
    ``ge_k``: the same search restricted to i <= j - k.
    ``le_k``: with lo = max(1, j - k) and d the largest i in [lo, j) with
    pi(i) > pi(j), the coordinate is d - lo + 1 (the number of window
    positions up to d), or 0 when no such d exists.
    ``eq_k``: 1 iff j > k and pi(j - k) > pi(j).
    """
    if variant not in LB_VARIANTS:
        raise BadParams(f"unknown left boundary variant {variant!r}")
    if variant != "base":
        if k is None:
            raise MissingParameterK(f"variant {variant!r} needs k")
        if k < 1:
            raise BadParams(f"k must be >= 1, got {k}")
    n = len(pi)
    out = []
    for j in range(1, n + 1):
        v = pi[j - 1]
        if variant == "eq_k":
            out.append(1 if j > k and pi[j - k - 1] > v else 0)
            continue
        if variant == "base":
            lo, hi = 1, j - 1
        elif variant == "ge_k":
            lo, hi = 1, j - k
        else:
            lo, hi = max(1, j - k), j - 1
        found = 0
        for i in range(hi, lo - 1, -1):
            if pi[i - 1] > v:
                found = i
                break
        if variant == "le_k":
            out.append(found - lo + 1 if found else 0)
        else:
            out.append(found)
    return tuple(out)


def lbsum(pi: Perm, variant: str = "base", k: int | None = None) -> int:
    return sum(lb_vector(pi, variant, k))


# -- runs and zone-crossing vectors ------------------------------------------

def k_step_runs(pi: Perm, k: int) -> list[Permutation]:
    """The k subsequences at positions congruent mod k, each flattened."""
    n = len(pi)
    if not 1 <= k <= n:
        raise KOutOfRange(f"k must lie in 1..{n}, got {k}")
    return [flatten(pi[i::k]) for i in range(k)]


def zone_vector(pi: Perm, kind: str = "ninv", augmented: bool = False) -> tuple[int, ...]:
    """Coordinate k counts pairs of ``kind`` with a <= k < b, for k = 1..n-1."""
    if kind not in ("inv", "ninv"):
        raise ValueError(f"unknown zone vector kind {kind!r}")
    n = len(pi)
    want_inv = kind == "inv"
    z = [0] * (n + 1)
    # each qualifying pair (a, b) adds 1 to coordinates a..b-1 (difference array)
    for a in range(n):
        for b in range(a + 1, n):
            if (pi[a] > pi[b]) == want_inv:
                z[a + 1] += 1
                z[b + 1] -= 1
    out = []
    run = 0
    for k in range(1, n):
        run += z[k]
        out.append(run)
    if augmented:
        return (0, *out, 0)
    return tuple(out)


def from_augmented_ninv_zone_vector(v: Sequence[int]) -> Permutation:
    """Rebuild pi from ``(0, z_1, ..., z_{n-1}, 0)`` of its non-inversion zone vector."""
    v = tuple(v)
    n = len(v) - 1
    if n < 1 or v[0] != 0 or v[-1] != 0:
        raise NotARealizableVector(f"{v} is not an augmented zone vector")
    values = [n - (k - 1) - (v[k] - v[k - 1]) for k in range(1, n + 1)]
    try:
        pi = Permutation(values)
    except ValueError as exc:
        raise NotARealizableVector(f"{v} decodes to {values}") from exc
    if zone_vector(pi, "ninv", augmented=True) != v:
        raise NotARealizableVector(f"{v} does not round-trip through {pi}")
    return pi


def insert_max(pi: Perm, k: int) -> Permutation:
    """Insert ``n + 1`` between positions k and k + 1."""
    n = len(pi)
    if not 0 <= k <= n:
        raise KOutOfRange(f"insertion slot must lie in 0..{n}, got {k}")
    return Permutation._trusted((*pi[:k], n + 1, *pi[k:]))


# -- statistic descriptors ---------------------------------------------------

_REQUIRED = {
    "invsum": (),
    "ninvsum": (),
    "cosine": (),
    "inv_k": ("k",),
    "ninv_k": ("k",),
    "inv_k1k2": ("k1", "k2"),
    "inv_le_k": ("k",),
    "modinv_dk": ("d", "k"),
    "ipcni_k": ("k",),
    "lbsum_variant": (),
}

TAGS = tuple(_REQUIRED)


@dataclass(frozen=True)
class StatisticSpec:
    """A statistic tag plus the parameters it needs."""

    tag: str
    k: int | None = None
    k1: int | None = None
    k2: int | None = None
    d: int | None = None
    variant: str | None = None

    def __post_init__(self):
        if self.tag not in _REQUIRED:
            raise BadParams(f"unknown statistic {self.tag!r}")
        needed = set(_REQUIRED[self.tag])
        if self.tag == "lbsum_variant":
            variant = self.variant or "base"
            if variant not in LB_VARIANTS:
                raise BadParams(f"unknown left boundary variant {variant!r}")
            object.__setattr__(self, "variant", variant)
            if variant != "base":
                needed.add("k")
        elif self.variant is not None:
            raise BadParams(f"{self.tag} takes no variant")
        for name in ("k", "k1", "k2", "d"):
            value = getattr(self, name)
            if name in needed:
                if value is None:
                    if name == "k":
                        raise MissingParameterK(f"{self.tag} needs k")
                    raise BadParams(f"{self.tag} needs {name}")
                if value < 1:
                    raise BadParams(f"{name} must be >= 1, got {value}")
            elif value is not None:
                raise BadParams(f"{self.tag} does not take {name}")
        if self.tag == "modinv_dk" and self.d < 2:
            raise BadParams(f"modinv_dk needs d >= 2, got {self.d}")

    def function(self) -> Callable[[Perm], int]:
        """A picklable single-argument evaluator."""
        t = self.tag
        if t == "invsum":
            return invsum
        if t == "ninvsum":
            return ninvsum
        if t == "cosine":
            return cosine
        if t == "inv_k":
            return partial(inv_k, k=self.k)
        if t == "ninv_k":
            return partial(ninv_k, k=self.k)
        if t == "inv_k1k2":
            return partial(inv_k1k2, k1=self.k1, k2=self.k2)
        if t == "inv_le_k":
            return partial(inv_le_k, k=self.k)
        if t == "modinv_dk":
            return partial(modinv_dk, d=self.d, k=self.k)
        if t == "ipcni_k":
            return partial(ipcni_k, k=self.k)
        return partial(lbsum, variant=self.variant, k=self.k)

    def __call__(self, pi: Perm) -> int:
        return self.function()(pi)

    def label(self) -> str:
        params = [f"{n}={getattr(self, n)}" for n in ("k", "k1", "k2", "d")
                  if getattr(self, n) is not None]
        if self.tag == "lbsum_variant":
            params.insert(0, f"variant={self.variant}")
        return f"{self.tag}({', '.join(params)})" if params else self.tag
