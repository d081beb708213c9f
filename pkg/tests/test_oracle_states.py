import json
import math

import numpy as np
import pytest

from ame.oracle import (
    GraphSpec,
    StateVector,
    ame43,
    basis_index,
    bell,
    ghz,
    graph_state,
    load_state,
    ring_graph,
    save_state,
)


def test_state_vector_validation():
    with pytest.raises(ValueError):
        StateVector(2, 2, np.ones(3) / math.sqrt(3))  # wrong length
    with pytest.raises(ValueError):
        StateVector(1, 2, np.array([1.0, 1.0]))  # unnormalized
    with pytest.raises(ValueError):
        StateVector(0, 2, np.array([1.0]))


def test_amplitudes_are_frozen():
    state = bell(2)
    with pytest.raises(ValueError):
        state.amplitudes[0] = 0.0


def test_basis_index_is_little_endian():
    assert basis_index((1, 0, 0), 2) == 1
    assert basis_index((0, 0, 1), 2) == 4
    assert basis_index((2, 1), 3) == 5


def test_site_tensor_matches_index_convention():
    rng = np.random.default_rng(3)
    v = rng.normal(size=27) + 1j * rng.normal(size=27)
    state = StateVector(3, 3, v / np.linalg.norm(v))
    t = state.site_tensor()
    for s0 in range(3):
        for s1 in range(3):
            for s2 in range(3):
                idx = basis_index((s0, s1, s2), 3)
                assert t[s0, s1, s2] == state.amplitudes[idx]


def test_bell_amplitudes():
    state = bell(2)
    assert state.amplitudes[0] == pytest.approx(1 / math.sqrt(2))
    assert state.amplitudes[3] == pytest.approx(1 / math.sqrt(2))
    assert state.amplitudes[1] == 0 and state.amplitudes[2] == 0


def test_ghz_support():
    state = ghz(3, 3)
    support = np.flatnonzero(state.amplitudes)
    assert list(support) == [basis_index((i, i, i), 3) for i in range(3)]


def test_ame43_support_size():
    state = ame43()
    support = np.flatnonzero(state.amplitudes)
    assert len(support) == 9
    assert np.allclose(state.amplitudes[support], 1 / 3)


def test_graph_spec_validation():
    with pytest.raises(ValueError):
        GraphSpec(2, 2, ((0, 1), (0, 0)))  # asymmetric
    with pytest.raises(ValueError):
        GraphSpec(2, 2, ((1, 0), (0, 0)))  # diagonal
    with pytest.raises(ValueError):
        GraphSpec(2, 2, ((0, 2), (2, 0)))  # weight out of range
    with pytest.raises(ValueError):
        GraphSpec(3, 2, ((0, 1), (1, 0)))  # wrong shape


def test_graph_spec_from_edges_and_edge_list():
    spec = GraphSpec.from_edges(3, 3, [(0, 1), (1, 2, 2)])
    assert spec.adjacency == ((0, 1, 0), (1, 0, 2), (0, 2, 0))
    assert spec.edges() == [(0, 1, 1), (1, 2, 2)]


def test_ring_graph_is_a_cycle():
    spec = ring_graph(5)
    degrees = [sum(1 for w in row if w) for row in spec.adjacency]
    assert degrees == [2] * 5
    assert spec.adjacency[0][4] == 1


def test_graph_state_empty_graph_is_uniform():
    spec = GraphSpec(2, 2, ((0, 0), (0, 0)))
    state = graph_state(spec)
    assert np.allclose(state.amplitudes, 0.5)


def test_graph_state_single_edge():
    spec = GraphSpec.from_edges(2, 2, [(0, 1)])
    state = graph_state(spec)
    # the phase lands on |11>, which is index 3
    assert np.allclose(state.amplitudes, [0.5, 0.5, 0.5, -0.5])


def test_graph_state_qutrit_phases():
    spec = GraphSpec.from_edges(2, 3, [(0, 1, 1)])
    state = graph_state(spec)
    omega = np.exp(2j * np.pi / 3)
    idx = basis_index((2, 2), 3)
    assert state.amplitudes[idx] == pytest.approx(omega ** (2 * 2 % 3) / 3)


def test_state_file_round_trip(tmp_path):
    path = tmp_path / "state.json"
    original = ghz(3, 2)
    save_state(original, path)
    loaded = load_state(path)
    assert loaded.n == 3 and loaded.d == 2
    assert np.allclose(loaded.amplitudes, original.amplitudes)


def test_load_state_rejects_unnormalized(tmp_path):
    path = tmp_path / "bad.json"
    doc = {"n": 1, "d": 2, "amplitudes": [[1.0, 0.0], [1.0, 0.0]]}
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError, match="not normalized"):
        load_state(path)


def test_load_state_renormalizes_within_tolerance(tmp_path):
    path = tmp_path / "near.json"
    a = math.sqrt(0.5) * (1 + 2e-10)
    doc = {"n": 1, "d": 2, "amplitudes": [[a, 0.0], [a, 0.0]]}
    path.write_text(json.dumps(doc))
    state = load_state(path)
    assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-15)


def test_load_state_rejects_malformed(tmp_path):
    path = tmp_path / "malformed.json"
    path.write_text("{\"n\": 2}")
    with pytest.raises(ValueError):
        load_state(path)
    path.write_text("not json at all")
    with pytest.raises(ValueError):
        load_state(path)


def test_load_state_rejects_wrong_length(tmp_path):
    path = tmp_path / "short.json"
    doc = {"n": 2, "d": 2, "amplitudes": [[1.0, 0.0]]}
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        load_state(path)
