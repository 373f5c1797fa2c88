"""Exact combinatorial primitives: binomials, Catalan numbers, Catalan products.

Everything here is arbitrary-precision integer arithmetic.  Divisions that are
supposed to be exact are checked, not assumed.
"""

from __future__ import annotations

import math

__all__ = ["binomial", "catalan", "catalan_product"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(i: int) -> int:
    """Catalan number C(2i, i) / (i + 1), indexed from catalan(1) = 1.

    The division is exact for every i >= 1; a nonzero remainder would mean an
    indexing bug, so it is treated as an internal error rather than truncated.
    """
    if i < 1:
        raise ValueError(f"catalan is defined for i >= 1, got i={i}")
    q, r = divmod(binomial(2 * i, i), i + 1)
    if r:
        raise ArithmeticError(f"(i+1) does not divide C(2i,i) at i={i}")
    return q


def catalan_product(n: int) -> int:
    """Product catalan(1) * catalan(2) * ... * catalan(n); the empty product is 1."""
    if n < 0:
        raise ValueError(f"catalan_product requires n >= 0, got n={n}")
    out = 1
    for i in range(1, n + 1):
        out *= catalan(i)
    return out
