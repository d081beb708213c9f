"""Exhaustive search for graph states passing the k-uniformity oracle."""

from __future__ import annotations

import itertools

import numpy as np

from .states import GraphSpec, graph_state, site_digits
from .weights import k_uniformity

_STATE_CAP = 10**4
_GRAPH_CAP = 10**7
_BATCH = 4096
# winnowing threshold on bipartition purities; survivors still face the full
# reduced-matrix check, so this only needs to be loose enough never to drop
# a genuine hit
_WINNOW_TOL = 1e-6


def _spec_from_id(cid: int, n: int, d: int, edges, powers) -> GraphSpec:
    adj = [[0] * n for _ in range(n)]
    for (u, v), p in zip(edges, powers):
        w = (cid // int(p)) % d
        adj[u][v] = adj[v][u] = w
    return GraphSpec(n=n, d=d, adjacency=tuple(tuple(row) for row in adj))


def find_ame_graph(n: int, d: int, limit: int | None = None) -> list[GraphSpec]:
    """All weighted graphs on n vertices whose graph state is floor(n/2)-uniform.

    Enumerates every symmetric zero-diagonal adjacency matrix with entries in
    {0, ..., d-1}; candidate k is the integer whose base-d digits are the edge
    weights in lexicographic edge order (0,1), (0,2), ..., first edge most
    significant, and candidates are scanned in ascending order, so the result
    order is deterministic.  Batches of candidates are first winnowed by
    bipartition purities (a maximally mixed reduction is exactly the purity
    minimizer), then each survivor is confirmed with the entrywise
    k_uniformity check.  `limit` stops the search after that many hits.
    """
    if n < 2 or d < 2:
        raise ValueError(f"need n >= 2 and d >= 2, got n={n}, d={d}")
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    n_edges = len(edges)
    total = d**n_edges
    dim = d**n
    if dim > _STATE_CAP or total > _GRAPH_CAP:
        raise ValueError(
            f"search out of desk scale: d**n = {dim} (cap {_STATE_CAP}), "
            f"candidate count = {total} (cap {_GRAPH_CAP})"
        )
    k = n // 2
    digits = site_digits(n, d)
    # s_u * s_v per basis state and edge, for the phase exponents
    prod = np.stack([digits[:, u] * digits[:, v] for u, v in edges], axis=1)
    # one bipartition per complementary pair: for even n keep only k-sets
    # containing vertex 0 (purity is symmetric under complement on pure states)
    cuts = []
    for sites in itertools.combinations(range(n), k):
        if n == 2 * k and 0 not in sites:
            continue
        axes = tuple(1 + (n - 1 - j) for j in sites)
        rest = tuple(ax for ax in range(1, n + 1) if ax not in axes)
        cuts.append((0,) + axes + rest)
    powers = d ** np.arange(n_edges - 1, -1, -1, dtype=np.int64)
    target = float(d) ** (-k)
    found: list[GraphSpec] = []
    for start in range(0, total, _BATCH):
        ids = np.arange(start, min(start + _BATCH, total))
        weights = (ids[:, None] // powers[None, :]) % d
        exponent = (weights @ prod.T) % d
        amps = np.exp(2j * np.pi * exponent / d) * d ** (-n / 2.0)
        batch = amps.reshape((len(ids),) + (d,) * n)
        alive = np.ones(len(ids), dtype=bool)
        for perm in cuts:
            if not alive.any():
                break
            psi = batch[alive].transpose(perm).reshape(-1, d**k, d ** (n - k))
            rho = np.einsum("sab,scb->sac", psi, psi.conj())
            purity = np.einsum("sac,sac->s", rho, rho.conj()).real
            ok = np.abs(purity - target) <= _WINNOW_TOL
            alive[np.flatnonzero(alive)[~ok]] = False
        for cid in ids[alive]:
            spec = _spec_from_id(int(cid), n, d, edges, powers)
            if k_uniformity(graph_state(spec), k).uniform:
                found.append(spec)
                if limit is not None and len(found) >= limit:
                    return found
    return found
