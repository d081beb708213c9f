"""Existence verdicts for AME(n, d) from the sign pattern of the invariants.

A strictly negative tr(P_{m+i}^2) is impossible for a genuine state, so any
negative solved trace rules the pair (n, d) out.  Positivity of every trace
is necessary but never sufficient: the seven-qubit case passes every check
here yet no state exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .enumerator import SystemParams, WeightTraceProfile, solve_traces


def satisfies_scott_bound(params: SystemParams) -> bool:
    """Classic size bound: n <= 2(d^2 - 1) for even n, n <= 2d(d+1) - 1 for odd n."""
    n, d = params.n, params.d
    if n % 2 == 0:
        return n <= 2 * (d * d - 1)
    return n <= 2 * d * (d + 1) - 1


@dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of the invariant check at one (n, d) point.

    witness_i is the smallest i whose trace is strictly negative, or None;
    ruled_out is true exactly when a witness exists.  Zero traces never rule
    out.
    """

    params: SystemParams
    ruled_out: bool
    witness_i: int | None
    profile: WeightTraceProfile
    scott_satisfied: bool


def check(params: SystemParams) -> ExistenceVerdict:
    """Solve all invariants for (n, d) and look for a strictly negative one."""
    profile = solve_traces(params)
    witness = next(
        (i for i in range(1, params.i_max + 1) if profile.traces[i] < 0), None
    )
    return ExistenceVerdict(
        params=params,
        ruled_out=witness is not None,
        witness_i=witness,
        profile=profile,
        scott_satisfied=satisfies_scott_bound(params),
    )


def scan(
    d_range: tuple[int, int], n_range: tuple[int, int]
) -> list[ExistenceVerdict]:
    """One verdict per grid point, d-major then n, both ranges inclusive.

    Empty ranges give an empty list.  Points are independent, so the scan is
    deterministic and byte-for-byte repeatable.
    """
    d_lo, d_hi = d_range
    n_lo, n_hi = n_range
    if d_lo > d_hi or n_lo > n_hi:
        return []
    if d_lo < 2 or n_lo < 2:
        raise ValueError(f"grid must start at n >= 2 and d >= 2, got n>={n_lo}, d>={d_lo}")
    return [
        check(SystemParams(n=n, d=d))
        for d in range(d_lo, d_hi + 1)
        for n in range(n_lo, n_hi + 1)
    ]


def i2_counterexamples(verdicts: Iterable[ExistenceVerdict]) -> list[SystemParams]:
    """Grid points ruled out without a negative trace at i=2 (absent counts too)."""
    return [
        verdict.params
        for verdict in verdicts
        if verdict.ruled_out
        and not (2 in verdict.profile.traces and verdict.profile.traces[2] < 0)
    ]


def first_negative_claim_holds(
    d_range: tuple[int, int], n_range: tuple[int, int]
) -> tuple[bool, list[SystemParams]]:
    """Does every rule-out on the grid already show a negative trace at i=2?

    Returns the verdict plus the offending grid points.  Vacuously true on
    grids without any negative trace.
    """
    counterexamples = i2_counterexamples(scan(d_range, n_range))
    return (not counterexamples, counterexamples)
