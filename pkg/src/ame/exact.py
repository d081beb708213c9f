"""Exact scalar arithmetic shared by the closed forms and the linear systems.

Every algebraic quantity in this package is a ``fractions.Fraction``;
nothing on that side ever touches floating point, so table regressions can
demand bit-exact equality.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Arbitrary-precision signed rational.  ``fractions.Fraction`` already stores
#: values in lowest terms with a positive denominator, which is exactly the
#: representation the exact formulas require.
ExactRational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k), returning 0 whenever k is out of range.

    The zero convention keeps the triangular-matrix builders free of special
    cases: entries whose binomial vanishes structurally are simply 0.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def hyp2f1_terminating(c: int, i: int, z: Fraction | int) -> Fraction:
    """Exact value of the terminating Gauss series 2F1(1, 1-i; c; z).

    The second upper parameter 1-i is a nonpositive integer, so the series
    has exactly ``i`` terms:

        sum_{k=0}^{i-1}  (1)_k (1-i)_k / (c)_k * z^k / k!

    Successive terms are produced via the ratio
    (1+k)(1-i+k) / ((c+k)(1+k)) * z; an independent Pochhammer-product
    summation is kept in the test suite as a cross-check.
    """
    if i < 1:
        raise ValueError(f"termination parameter must be >= 1, got i={i}")
    if c < 1:
        raise ValueError(f"lower parameter must be >= 1, got c={c}")
    z = Fraction(z)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(i):
        total += term
        term *= Fraction((1 + k) * (1 - i + k), (c + k) * (1 + k)) * z
    return total
