"""Exact permutation statistics, their distribution polynomials, and
permutations with a prescribed dot product against the identity."""

from .errors import DomainError, PermstatError
from .permutation import Permutation, enumerate_permutations, identity, parse
from .polynomials import IntPolynomial, eulerian, q_binomial, q_factorial
from .statistics import StatisticSpec

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IntPolynomial",
    "Permutation",
    "PermstatError",
    "StatisticSpec",
    "enumerate_permutations",
    "eulerian",
    "identity",
    "parse",
    "q_binomial",
    "q_factorial",
]
