"""Triangular weight-invariant systems of AME states and their closed forms.

For an n-party state with local dimension d, write m = floor(n/2).  When the
state is absolutely maximally entangled, the traces x_i = tr(P_{m+i}^2) of its
squared weight-(m+i) Bloch components satisfy a lower-triangular linear system
whose rows come from the purity of the (m+i)-party reductions; the eigenvalues
lam_{m+i} of those components satisfy a second triangular system with the same
right-hand side.  This module builds both systems exactly, solves them by
forward substitution, carries their explicit inverses, and evaluates the
hypergeometric closed forms for the same quantities on an independent code
path.  Forward substitution and the closed forms never call each other; their
bit-exact agreement is the package's central correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import binomial, hyp2f1_terminating

Flavor = Literal["A", "B"]


@dataclass(frozen=True)
class SystemParams:
    """Party count and local dimension; m = floor(n/2) is derived on demand."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if self.d < 2:
            raise ValueError(f"need d >= 2, got d={self.d}")

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def i_max(self) -> int:
        """Largest valid weight offset: i runs over 1..n-m, weight m+i_max = n."""
        return self.n - self.m


def _d_pow(d: int, exponent: int) -> Fraction:
    return Fraction(d) ** exponent


def _check_i_range(params: SystemParams, i: int) -> None:
    if i < 1 or params.m + i > params.n:
        raise ValueError(
            f"weight offset i={i} out of range 1..{params.i_max} for n={params.n}"
        )


@dataclass(frozen=True)
class TriangularSystem:
    """Lower-triangular system over exact rationals.

    Flavor "A" couples the squared-component traces x_j = tr(P_{m+j}^2);
    flavor "B" couples the eigenvalues lam_{m+j}.  Both share the right-hand
    side entries d^-(n-(m+l)) - d^-(m+l).
    """

    params: SystemParams
    flavor: Flavor
    size: int
    entries: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]


def build_system(params: SystemParams, i: int, flavor: Flavor) -> TriangularSystem:
    """Populate the flavor-A or flavor-B triangular system of size i.

    Row l, column j (1-based, j <= l):

        A_lj = d^(-2m-l-j) * C(m+l, m+j)
        B_lj = d^(-m-l)    * C(m+l, m+j)

    Entries above the diagonal are zero; diagonals are nonzero, so forward
    substitution solves either flavor uniquely.
    """
    _check_i_range(params, i)
    if flavor not in ("A", "B"):
        raise ValueError(f"flavor must be 'A' or 'B', got {flavor!r}")
    n, d, m = params.n, params.d, params.m
    rows = []
    for l in range(1, i + 1):
        row = []
        for j in range(1, i + 1):
            if j > l:
                row.append(Fraction(0))
            elif flavor == "A":
                row.append(_d_pow(d, -2 * m - l - j) * binomial(m + l, m + j))
            else:
                row.append(_d_pow(d, -m - l) * binomial(m + l, m + j))
        rows.append(tuple(row))
    rhs = tuple(
        _d_pow(d, -(n - (m + l))) - _d_pow(d, -(m + l)) for l in range(1, i + 1)
    )
    return TriangularSystem(params, flavor, i, tuple(rows), rhs)


def explicit_inverse(system: TriangularSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Closed-form inverse of the system matrix, lower triangular again.

    Flavor A inverse entry (l, j): (-1)^(l+j) d^(2m+l+j) C(m+l, m+j), which is
    the forward entry with d replaced by (-d)^-1 (the even 2m in the exponent
    leaves the sign depending on l+j only).  Flavor B inverse entry:
    (-1)^(l+j) d^(m+j) C(m+l, m+j).  In both cases the product with the
    forward matrix telescopes into alternating binomial sums that vanish off
    the diagonal; tests multiply the matrices and demand the exact identity.
    """
    d, m = system.params.d, system.params.m
    size = system.size
    rows = []
    for l in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if j > l:
                row.append(Fraction(0))
            else:
                sign = -1 if (l + j) % 2 else 1
                if system.flavor == "A":
                    row.append(sign * _d_pow(d, 2 * m + l + j) * binomial(m + l, m + j))
                else:
                    row.append(sign * _d_pow(d, m + j) * binomial(m + l, m + j))
        rows.append(tuple(row))
    return tuple(rows)


def _forward_substitute(system: TriangularSystem) -> tuple[Fraction, ...]:
    xs: list[Fraction] = []
    for l in range(system.size):
        acc = system.rhs[l]
        for j in range(l):
            acc -= system.entries[l][j] * xs[j]
        xs.append(acc / system.entries[l][l])
    return tuple(xs)


@dataclass(frozen=True)
class WeightTraceProfile:
    """Exact invariants indexed by i = 1..i_max (Bloch weight m+i).

    traces[i] and eigenvalues[i] are related by the exact factor d^(m+i);
    both are solved independently, so that relation is checkable rather than
    built in.
    """

    params: SystemParams
    traces: dict[int, Fraction]
    eigenvalues: dict[int, Fraction]


def solve_traces(params: SystemParams, i_max: int | None = None) -> WeightTraceProfile:
    """Solve both triangular systems by forward substitution.

    This path never evaluates the hypergeometric closed forms; the closed
    forms are the independent route the tests compare against.
    """
    if i_max is None:
        i_max = params.i_max
    _check_i_range(params, i_max)
    xs = _forward_substitute(build_system(params, i_max, "A"))
    ys = _forward_substitute(build_system(params, i_max, "B"))
    return WeightTraceProfile(
        params=params,
        traces={i + 1: xs[i] for i in range(i_max)},
        eigenvalues={i + 1: ys[i] for i in range(i_max)},
    )


def trace_closed_form(params: SystemParams, i: int) -> Fraction:
    """tr(P_{m+i}^2) from the hypergeometric closed form, without any solve.

    Value: (-1)^i d^(i+m) C(i+m, 1+m)
           * [1+m - d^(2(1+m)-n) (i+m) 2F1(1, 1-i; 2+m; d^2)] / (i+m).
    """
    _check_i_range(params, i)
    n, d, m = params.n, params.d, params.m
    series = hyp2f1_terminating(2 + m, i, Fraction(d * d))
    bracket = (1 + m) - _d_pow(d, 2 * (1 + m) - n) * (i + m) * series
    sign = -1 if i % 2 else 1
    return sign * _d_pow(d, i + m) * binomial(i + m, 1 + m) * bracket / (i + m)


def trace_i2_specialization(params: SystemParams) -> Fraction:
    """tr(P_{m+2}^2) as the explicit parity-split polynomial in n and d.

    Odd n:  (d-1)/2   * d^((3+n)/2) * (2d^2 + 2d - 1 - n)
    Even n: (d^2-1)/2 * d^(2+n/2)   * (2d^2 - 2 - n)

    Its sign reproduces the classic size bound for AME existence, which is
    what makes i=2 the critical weight.
    """
    if params.i_max < 2:
        raise ValueError(f"i=2 out of range for n={params.n}")
    n, d = params.n, params.d
    if n % 2:
        return Fraction(d - 1, 2) * _d_pow(d, (3 + n) // 2) * (2 * d * d + 2 * d - 1 - n)
    return Fraction(d * d - 1, 2) * _d_pow(d, 2 + n // 2) * (2 * d * d - 2 - n)


def eigenvalue_closed_form(params: SystemParams, i: int) -> Fraction:
    """Eigenvalue lam_{m+i} of the weight-(m+i) component, closed form.

    Identical to the trace closed form except for the overall d^(m+i); the
    factor relation traces[i] = d^(m+i) * eigenvalues[i] is asserted in tests
    rather than used here.
    """
    _check_i_range(params, i)
    n, d, m = params.n, params.d, params.m
    series = hyp2f1_terminating(2 + m, i, Fraction(d * d))
    bracket = (1 + m) - _d_pow(d, 2 * (1 + m) - n) * (i + m) * series
    sign = -1 if i % 2 else 1
    return sign * binomial(i + m, 1 + m) * bracket / (i + m)


def purity_identity_residual(params: SystemParams) -> Fraction:
    """Residual of the global purity decomposition on the solved traces.

    d^(-2n) [d^n + sum_i C(n, m+i) d^(n-(m+i)) traces[i]] - 1, which is
    exactly zero because the last system row encodes full-state purity.
    """
    profile = solve_traces(params)
    n, d, m = params.n, params.d, params.m
    acc = _d_pow(d, n)
    for i in range(1, params.i_max + 1):
        acc += binomial(n, m + i) * _d_pow(d, n - (m + i)) * profile.traces[i]
    return _d_pow(d, -2 * n) * acc - 1
