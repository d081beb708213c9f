"""Dense qudit state vectors and explicit constructions.

Amplitude indexing is fixed once and for all: the basis label
(s_0, ..., s_{n-1}) sits at flat index sum_j s_j * d**j, party 0 least
significant.  Everything downstream (reductions, the state-file format, the
graph search) relies on this convention, so it is enforced here and nowhere
re-derived.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

_NORM_TOL = 1e-12
FILE_NORM_TOL = 1e-9


@dataclass(frozen=True)
class StateVector:
    """Pure state of n qudits with local dimension d, unit norm."""

    n: int
    d: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 2:
            raise ValueError(f"need n >= 1 and d >= 2, got n={self.n}, d={self.d}")
        amps = np.array(self.amplitudes, dtype=np.complex128)
        dim = self.d**self.n
        if amps.shape != (dim,):
            raise ValueError(
                f"amplitude vector must have length d**n = {dim}, got shape {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def site_tensor(self) -> np.ndarray:
        """View with one axis per party, axis j indexing party j.

        The flat vector is party-0-least-significant, so a plain reshape puts
        party n-1 on axis 0; reversing the axes restores site order.
        """
        t = self.amplitudes.reshape((self.d,) * self.n)
        return t.transpose(tuple(range(self.n - 1, -1, -1)))


def basis_index(labels: Sequence[int], d: int) -> int:
    """Flat index of the basis label (s_0, ..., s_{n-1})."""
    return sum(s * d**j for j, s in enumerate(labels))


def site_digits(n: int, d: int) -> np.ndarray:
    """Matrix D with D[i, j] = digit of party j in flat index i, shape (d**n, n)."""
    idx = np.arange(d**n)
    return (idx[:, None] // d ** np.arange(n)[None, :]) % d


def bell(d: int = 2) -> StateVector:
    """Maximally entangled pair sum_i |ii> / sqrt(d)."""
    amps = np.zeros(d * d, dtype=np.complex128)
    amps[np.arange(d) * (d + 1)] = 1.0 / math.sqrt(d)
    return StateVector(2, d, amps)


def ghz(n: int, d: int = 2) -> StateVector:
    """Generalized GHZ state sum_i |i...i> / sqrt(d) on n parties."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    amps = np.zeros(d**n, dtype=np.complex128)
    stride = sum(d**j for j in range(n))
    amps[np.arange(d) * stride] = 1.0 / math.sqrt(d)
    return StateVector(n, d, amps)


def ame43() -> StateVector:
    """Minimal-support four-qutrit state (1/3) sum_{i,j} |i, j, i+j, i+2j> mod 3."""
    amps = np.zeros(81, dtype=np.complex128)
    for i in range(3):
        for j in range(3):
            amps[basis_index((i, j, (i + j) % 3, (i + 2 * j) % 3), 3)] = 1.0 / 3.0
    return StateVector(4, 3, amps)


@dataclass(frozen=True)
class GraphSpec:
    """Weighted graph on n vertices, edge weights in {0, ..., d-1}.

    The adjacency matrix is symmetric with zero diagonal; weight 0 means no
    edge.
    """

    n: int
    d: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 2:
            raise ValueError(f"need n >= 1 and d >= 2, got n={self.n}, d={self.d}")
        adj = tuple(tuple(int(w) for w in row) for row in self.adjacency)
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise ValueError(f"adjacency must be {self.n}x{self.n}")
        for u in range(self.n):
            if adj[u][u] != 0:
                raise ValueError(f"nonzero diagonal at vertex {u}")
            for v in range(self.n):
                if adj[u][v] != adj[v][u]:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                if not 0 <= adj[u][v] < self.d:
                    raise ValueError(
                        f"edge weight {adj[u][v]} at ({u}, {v}) outside 0..{self.d - 1}"
                    )
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, d: int, edges: Iterable[tuple]) -> "GraphSpec":
        """Build from (u, v) or (u, v, weight) tuples; bare pairs get weight 1."""
        adj = [[0] * n for _ in range(n)]
        for edge in edges:
            u, v, *rest = edge
            w = rest[0] if rest else 1
            adj[u][v] = adj[v][u] = w
        return cls(n, d, tuple(tuple(row) for row in adj))

    def edges(self) -> list[tuple[int, int, int]]:
        """Weighted edges (u, v, w) with u < v and w > 0, lexicographic order."""
        return [
            (u, v, self.adjacency[u][v])
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adjacency[u][v]
        ]


def ring_graph(n: int, d: int = 2) -> GraphSpec:
    """Cycle C_n with unit edge weights."""
    return GraphSpec.from_edges(n, d, [(j, (j + 1) % n) for j in range(n - 1)] + [(0, n - 1)])


def graph_state(spec: GraphSpec) -> StateVector:
    """Uniform superposition with one controlled-phase layer per weighted edge.

    Each edge {u, v} of weight w multiplies the amplitude of |s> by
    exp(2*pi*i * w * s_u * s_v / d).
    """
    n, d = spec.n, spec.d
    digits = site_digits(n, d)
    exponent = np.zeros(d**n, dtype=np.int64)
    for u, v, w in spec.edges():
        exponent += w * digits[:, u] * digits[:, v]
    amps = np.exp(2j * np.pi * (exponent % d) / d) * d ** (-n / 2.0)
    return StateVector(n, d, amps)


def load_state(path) -> StateVector:
    """Read a state file: JSON with integer fields n, d and an `amplitudes`
    array of [real, imaginary] pairs of length d**n (party 0 least
    significant).

    Normalization is checked at tolerance 1e-9 and the vector is then
    rescaled to unit norm so the StateVector invariant holds at machine
    precision.
    """
    with open(path) as fh:
        doc = json.load(fh)
    try:
        n = int(doc["n"])
        d = int(doc["d"])
        amps = np.array([complex(re, im) for re, im in doc["amplitudes"]], dtype=np.complex128)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state file {path}: {exc}") from exc
    if n < 1 or d < 2 or amps.shape != (d**n,):
        raise ValueError(
            f"malformed state file {path}: need n >= 1, d >= 2 and d**n amplitudes"
        )
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > FILE_NORM_TOL:
        raise ValueError(f"state in {path} not normalized: norm = {norm!r}")
    return StateVector(n, d, amps / norm)


def save_state(state: StateVector, path) -> None:
    """Write the state-file format read back by load_state."""
    doc = {
        "n": state.n,
        "d": state.d,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")
