from fractions import Fraction

import pytest

from ame.enumerator import (
    SystemParams,
    build_system,
    eigenvalue_closed_form,
    explicit_inverse,
    purity_identity_residual,
    solve_traces,
    trace_closed_form,
    trace_i2_specialization,
)
from reference_values import QUBIT_TRACES

GRID = [
    SystemParams(n=n, d=d) for d in (2, 3, 4) for n in range(2, 15)
]


def test_params_validation():
    with pytest.raises(ValueError):
        SystemParams(n=1, d=2)
    with pytest.raises(ValueError):
        SystemParams(n=4, d=1)
    p = SystemParams(n=9, d=3)
    assert p.m == 4 and p.i_max == 5


def test_system_a_one_by_one():
    sys_ = build_system(SystemParams(n=3, d=2), 1, "A")
    assert sys_.entries == ((Fraction(1, 16),),)
    assert sys_.rhs == (Fraction(1, 4),)


def test_system_b_one_by_one():
    sys_ = build_system(SystemParams(n=2, d=2), 1, "B")
    assert sys_.entries == ((Fraction(1, 4),),)
    assert sys_.rhs == (Fraction(3, 4),)


def test_systems_are_lower_triangular_with_nonzero_diagonal():
    for params in GRID:
        for flavor in ("A", "B"):
            sys_ = build_system(params, params.i_max, flavor)
            for l in range(sys_.size):
                assert sys_.entries[l][l] != 0
                for j in range(l + 1, sys_.size):
                    assert sys_.entries[l][j] == 0


def test_build_system_rejects_bad_input():
    params = SystemParams(n=5, d=2)
    with pytest.raises(ValueError):
        build_system(params, 0, "A")
    with pytest.raises(ValueError):
        build_system(params, params.i_max + 1, "A")
    with pytest.raises(ValueError):
        build_system(params, 1, "C")


def test_inverse_one_by_one():
    sys_ = build_system(SystemParams(n=3, d=2), 1, "A")
    assert explicit_inverse(sys_) == ((Fraction(16),),)


def test_inverse_b_off_diagonal_sign():
    # flavor B inverse entry (2, 1) for n=4, d=3: -d^(m+1) C(m+2, m+1)
    sys_ = build_system(SystemParams(n=4, d=3), 2, "B")
    inv = explicit_inverse(sys_)
    assert inv[1][0] == -108


def test_inverse_is_exact_identity():
    for params in GRID:
        for flavor in ("A", "B"):
            sys_ = build_system(params, params.i_max, flavor)
            inv = explicit_inverse(sys_)
            for l in range(sys_.size):
                for j in range(sys_.size):
                    acc = sum(
                        (sys_.entries[l][t] * inv[t][j] for t in range(sys_.size)),
                        Fraction(0),
                    )
                    assert acc == (1 if l == j else 0)


def test_solver_reproduces_qubit_reference_rows():
    for n, cells in QUBIT_TRACES.items():
        profile = solve_traces(SystemParams(n=n, d=2))
        assert {i: profile.traces[i] for i in cells} == cells


def test_solver_four_qutrit_values():
    profile = solve_traces(SystemParams(n=4, d=3))
    assert profile.traces == {1: 216, 2: 3888}


def test_closed_form_equals_solver():
    for params in GRID:
        profile = solve_traces(params)
        for i in range(1, params.i_max + 1):
            assert trace_closed_form(params, i) == profile.traces[i]
            assert eigenvalue_closed_form(params, i) == profile.eigenvalues[i]


def test_trace_factors_through_eigenvalue():
    for params in GRID:
        profile = solve_traces(params)
        for i in range(1, params.i_max + 1):
            scale = Fraction(params.d) ** (params.m + i)
            assert profile.traces[i] == scale * profile.eigenvalues[i]


def test_i2_specialization_agrees():
    for params in GRID:
        if params.i_max < 2:
            continue
        assert trace_i2_specialization(params) == trace_closed_form(params, 2)


def test_i2_specialization_rejects_small_n():
    with pytest.raises(ValueError):
        trace_i2_specialization(SystemParams(n=2, d=2))


def test_closed_form_range_check():
    params = SystemParams(n=6, d=2)
    with pytest.raises(ValueError):
        trace_closed_form(params, 0)
    with pytest.raises(ValueError):
        trace_closed_form(params, params.i_max + 1)


def test_purity_identity_is_exactly_zero():
    for params in GRID:
        assert purity_identity_residual(params) == 0


def test_partial_solve_is_prefix_of_full_solve():
    params = SystemParams(n=10, d=2)
    full = solve_traces(params)
    part = solve_traces(params, i_max=3)
    assert part.traces == {i: full.traces[i] for i in (1, 2, 3)}
