"""Reduced density matrices, subsystem purities, and Bloch weight traces.

The per-support weight trace is obtained by inclusion-exclusion over
subsystem purities,

    tr(P_S^2) = d^|S| * sum_{T subseteq S} (-1)^(|S| - |T|) d^|T| tr(rho_T^2),

with the empty reduction read as the scalar 1.  This route never chooses a
generator basis, which makes it the reference implementation; the expansion
in `basis` recomputes the same numbers from squared Bloch coefficients and
the two must agree to 1e-9 on every state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .states import StateVector

DESK_SCALE = 10**6


def _validated_sites(state: StateVector, sites: Iterable[int], allow_empty: bool = False):
    out = tuple(int(j) for j in sites)
    if not out and not allow_empty:
        raise ValueError("site subset must be nonempty")
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate sites: {out}")
    for j in out:
        if not 0 <= j < state.n:
            raise ValueError(f"site {j} out of range for n={state.n}")
    return tuple(sorted(out))


def _ket_matrix(state: StateVector, keep: tuple[int, ...]) -> np.ndarray:
    """Amplitudes as a (kept, traced-out) matrix, kept sites in ascending order."""
    rest = tuple(j for j in range(state.n) if j not in keep)
    t = state.site_tensor().transpose(keep + rest)
    return np.ascontiguousarray(t).reshape(state.d ** len(keep), state.d ** len(rest))


@dataclass(frozen=True)
class DensityMatrix:
    """Reduced state on an ordered tuple of parties; validated on construction."""

    parties: tuple[int, ...]
    d: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        rho = np.array(self.entries, dtype=np.complex128)
        dim = self.d ** len(self.parties)
        if rho.shape != (dim, dim):
            raise ValueError(f"entries must be {dim}x{dim}, got {rho.shape}")
        if np.abs(rho - rho.conj().T).max() > 1e-12:
            raise ValueError("density matrix not Hermitian")
        if abs(complex(np.trace(rho)).real - 1.0) > 1e-12:
            raise ValueError("density matrix trace != 1")
        if float(np.linalg.eigvalsh(rho).min()) < -1e-9:
            raise ValueError("density matrix not positive semidefinite")
        rho.flags.writeable = False
        object.__setattr__(self, "entries", rho)

    def purity(self) -> float:
        # Frobenius norm squared equals tr(rho^2) for Hermitian rho
        return float(np.vdot(self.entries, self.entries).real)


def partial_trace(state: StateVector, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on `keep` (ascending order), complement summed out."""
    sites = _validated_sites(state, keep)
    psi = _ket_matrix(state, sites)
    return DensityMatrix(parties=sites, d=state.d, entries=psi @ psi.conj().T)


def subset_purity(state: StateVector, sites: Iterable[int]) -> float:
    """tr(rho_S^2) for the reduction onto `sites`; the empty reduction gives 1.

    A pure state carries equal Schmidt spectra on the two sides of any
    bipartition, so the computation always runs on the smaller side.
    """
    S = _validated_sites(state, sites, allow_empty=True)
    if len(S) * 2 > state.n:
        S = tuple(j for j in range(state.n) if j not in S)
    if not S:
        norm_sq = float(np.vdot(state.amplitudes, state.amplitudes).real)
        return norm_sq * norm_sq
    psi = _ket_matrix(state, S)
    rho = psi @ psi.conj().T
    return float(np.vdot(rho, rho).real)


def subset_weight_trace(state: StateVector, sites: Iterable[int]) -> float:
    """tr(P_S^2) for exact support S, via inclusion-exclusion over purities."""
    S = _validated_sites(state, sites)
    return _mobius(state, S, {T: subset_purity(state, T)
                              for r in range(len(S) + 1)
                              for T in itertools.combinations(S, r)})


def _mobius(state: StateVector, S: tuple[int, ...], purities) -> float:
    acc = 0.0
    for r in range(len(S) + 1):
        sign = (-1) ** (len(S) - r)
        block = sum(purities[T] for T in itertools.combinations(S, r))
        acc += sign * state.d**r * block
    return state.d ** len(S) * acc


@dataclass(frozen=True)
class WeightDistribution:
    """tr(P_S^2) for every nonempty support S of an n-party state."""

    n: int
    d: int
    per_subset: dict[tuple[int, ...], float]

    def per_weight(self) -> dict[int, list[float]]:
        """Values grouped by |S|, in subset enumeration order."""
        out: dict[int, list[float]] = {w: [] for w in range(1, self.n + 1)}
        for S, value in self.per_subset.items():
            out[len(S)].append(value)
        return out


def weight_distribution(state: StateVector) -> WeightDistribution:
    """Weight traces for every nonempty support, purity route.

    Subsets are enumerated by (size, lexicographic) order.  Desk scale only.
    """
    if state.d**state.n > DESK_SCALE:
        raise ValueError(f"state too large: d**n = {state.d**state.n} > {DESK_SCALE}")
    sites = range(state.n)
    purities = {
        T: subset_purity(state, T)
        for r in range(state.n + 1)
        for T in itertools.combinations(sites, r)
    }
    per_subset = {
        S: _mobius(state, S, purities)
        for r in range(1, state.n + 1)
        for S in itertools.combinations(sites, r)
    }
    return WeightDistribution(n=state.n, d=state.d, per_subset=per_subset)


class UniformityReport(NamedTuple):
    uniform: bool
    max_deviation: float


def k_uniformity(state: StateVector, k: int, tol: float = 1e-9) -> UniformityReport:
    """Is every k-party reduction maximally mixed, within tol in max entry?"""
    if not 1 <= k <= state.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} for n={state.n}")
    eye = np.eye(state.d**k) * state.d ** (-k)
    worst = 0.0
    for sites in itertools.combinations(range(state.n), k):
        rho = partial_trace(state, sites).entries
        worst = max(worst, float(np.abs(rho - eye).max()))
    return UniformityReport(worst <= tol, worst)


def projector_property_residual(state: StateVector, keep: Iterable[int]) -> float:
    """Max-entry deviation of rho_A^2 - d^(-k) * rho_A, k parties traced out.

    Vanishes exactly when the traced-out reduction is maximally mixed, which
    is the situation for every reduction of an AME state retaining at least
    n - floor(n/2) parties; the keep-set size is restricted accordingly.
    """
    sites = _validated_sites(state, keep)
    least = state.n - state.n // 2
    if len(sites) < least:
        raise ValueError(f"keep-set must retain >= n - floor(n/2) = {least} parties")
    k = state.n - len(sites)
    rho = partial_trace(state, sites).entries
    return float(np.abs(rho @ rho - state.d ** (-k) * rho).max())
