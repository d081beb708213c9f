"""Hermitian one-site operator basis and coefficient-space weight traces.

Normalization: tr(g_a g_b) = d * delta_ab with g_0 the identity, so d = 2
gives exactly {I, X, Y, Z}.  Higher d follows the Gell-Mann pattern
(symmetric / antisymmetric pair operators, then diagonal ladders), rescaled
from the conventional trace-2 normalization to trace d.

With rho = d^-n sum_alpha r_alpha g_alpha, grouping squared coefficients by
the exact support S of alpha gives tr(P_S^2) = d^|S| * sum_{supp(alpha)=S}
r_alpha^2 -- the second, basis-dependent route to the numbers produced by
`weights.weight_distribution`.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .states import StateVector
from .weights import WeightDistribution

_COEFF_SCALE = 10**7


def one_site_basis(d: int) -> np.ndarray:
    """Stack of d^2 Hermitian matrices, identity first, tr(g_a g_b) = d*delta_ab."""
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    g = np.zeros((d * d, d, d), dtype=np.complex128)
    g[0] = np.eye(d)
    a = 1
    s = math.sqrt(d / 2.0)
    for j in range(d):
        for k in range(j + 1, d):
            g[a, j, k] = s
            g[a, k, j] = s
            a += 1
            g[a, j, k] = -1j * s
            g[a, k, j] = 1j * s
            a += 1
    for l in range(1, d):
        c = math.sqrt(d / (l * (l + 1)))
        for j in range(l):
            g[a, j, j] = c
        g[a, l, l] = -l * c
        a += 1
    return g


def bloch_coefficients(state: StateVector) -> np.ndarray:
    """Coefficient tensor r[a_0, ..., a_{n-1}] = tr(rho * g_{a_0} x ... x g_{a_{n-1}}).

    Contracts the rank-1 density tensor against the basis one site at a time,
    keeping peak memory at d^(2n) complex entries instead of the naive
    d^(3n).  Hermiticity makes every coefficient real; the imaginary parts
    are checked to be rounding noise and dropped.
    """
    n, d = state.n, state.d
    if d ** (2 * n) > _COEFF_SCALE:
        raise ValueError(f"coefficient tensor too large: d**(2n) = {d ** (2 * n)}")
    g = one_site_basis(d)
    t = np.ascontiguousarray(state.site_tensor()).reshape(d**n)
    cur = np.outer(t, t.conj()).reshape(1, d**n, d**n)
    for j in range(n):
        r = d ** (n - 1 - j)
        cur = cur.reshape(-1, d, r, d, r)
        # r[..., a] picks up tr over site j: sum_{x,y} rho[x, ...; y, ...] g[a, y, x]
        cur = np.einsum("axXyY,gyx->agXY", cur, g)
        cur = cur.reshape(cur.shape[0] * d * d, r, r)
    coeffs = cur.reshape((d * d,) * n)
    if float(np.abs(coeffs.imag).max()) > 1e-9:
        raise AssertionError("Bloch coefficients of a Hermitian matrix must be real")
    return np.ascontiguousarray(coeffs.real)


def weight_distribution_basis(state: StateVector) -> WeightDistribution:
    """Same contract as weights.weight_distribution, from squared coefficients."""
    n, d = state.n, state.d
    sq = bloch_coefficients(state).reshape(-1) ** 2
    # support bitmask of each flat coefficient index (party j -> bit j)
    idx = np.arange(d ** (2 * n))
    masks = np.zeros(idx.shape, dtype=np.int64)
    for j in range(n):
        digit = (idx // (d * d) ** (n - 1 - j)) % (d * d)
        masks |= (digit != 0).astype(np.int64) << j
    acc = np.bincount(masks, weights=sq, minlength=2**n)
    per_subset = {
        S: d**w * float(acc[sum(1 << j for j in S)])
        for w in range(1, n + 1)
        for S in itertools.combinations(range(n), w)
    }
    return WeightDistribution(n=n, d=d, per_subset=per_subset)
