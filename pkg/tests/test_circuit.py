import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from recqft.circuit import (
    CR,
    H,
    SWAP,
    Circuit,
    apply_circuit,
    apply_gate,
    basis_state,
    invert,
    random_state,
    unitary_of,
)
from recqft.fft import dft_direct, dft_matrix
from recqft.qft import build_mqft, build_qft

from conftest import random_circuit

S = 2**-0.5


def kron_unitary(n, gate):
    """Build the full matrix from Kronecker products, qubit 1 leftmost."""
    eye = np.eye(2)
    if isinstance(gate, H):
        ops = [eye] * n
        ops[gate.target - 1] = S * np.array([[1, 1], [1, -1]])
        out = np.array([[1.0]])
        for op in ops:
            out = np.kron(out, op)
        return out
    size = 1 << n
    out = np.zeros((size, size), dtype=complex)
    for j in range(size):
        bits = [(j >> (n - q)) & 1 for q in range(1, n + 1)]
        if isinstance(gate, CR):
            phase = np.exp(gate.sign * 2j * np.pi / 2**gate.d)
            out[j, j] = phase if bits[gate.control - 1] and bits[gate.target - 1] else 1
        else:
            bits[gate.a - 1], bits[gate.b - 1] = bits[gate.b - 1], bits[gate.a - 1]
            k = int("".join(map(str, bits)), 2)
            out[k, j] = 1
    return out


def test_hadamard_on_zero():
    assert_allclose(apply_gate([1, 0], H(1)), [S, S])


def test_cr_on_11():
    out = apply_gate(basis_state(2, 3), CR(2, 1, 2))
    assert_allclose(out, [0, 0, 0, 1j], atol=1e-16)


def test_swap_moves_01_to_10():
    assert np.array_equal(apply_gate(basis_state(2, 1), SWAP(1, 2)), basis_state(2, 2))


def test_qubit_one_is_most_significant():
    # H on qubit 1 of |00> spreads over indices 0 and 2 (binary 00 and 10)
    assert_allclose(apply_gate(basis_state(2, 0), H(1)), [S, 0, S, 0])
    assert_allclose(apply_gate(basis_state(2, 0), H(2)), [S, S, 0, 0])


@pytest.mark.parametrize(
    "gate",
    [H(1), H(2), H(3), CR(2, 1, 3), CR(3, 3, 1), CR(2, 2, 3, -1), SWAP(1, 3), SWAP(2, 1)],
)
def test_gate_matches_kronecker_construction(gate):
    assert_allclose(unitary_of(Circuit(3, [gate])), kron_unitary(3, gate), atol=1e-15)


def test_cr_is_symmetric_in_its_qubits():
    for d in (2, 3, 4):
        a = unitary_of(Circuit(4, [CR(d, 1, 4)]))
        b = unitary_of(Circuit(4, [CR(d, 4, 1)]))
        assert np.array_equal(a, b)


@pytest.mark.parametrize("gate", [H(4), CR(2, 1, 5), CR(4, 1, 2), CR(2, 2, 2), SWAP(1, 1), SWAP(0, 2)])
def test_invalid_gate_rejected(gate):
    with pytest.raises(ValueError):
        apply_gate(basis_state(3, 0), gate)


def test_invalid_gate_leaves_input_untouched():
    s = basis_state(2, 1)
    before = s.copy()
    with pytest.raises(ValueError):
        apply_gate(s, H(3))
    assert np.array_equal(s, before)


def test_circuit_validates_gates():
    with pytest.raises(ValueError):
        Circuit(2, [H(1), CR(3, 1, 2)])
    with pytest.raises(ValueError):
        Circuit(-1)
    with pytest.raises(TypeError):
        Circuit(1, ["H 1"])


def test_apply_gate_is_out_of_place(rng):
    s = random_state(3, rng)
    before = s.copy()
    for g in (H(2), CR(3, 1, 2), SWAP(1, 3)):
        apply_gate(s, g)
    assert np.array_equal(s, before)


def test_norm_preserved_by_every_gate(rng):
    for n in range(1, 11):
        s = random_state(n, rng)
        gates = [H(q) for q in range(1, n + 1)]
        for a, b in itertools.permutations(range(1, n + 1), 2):
            gates.append(SWAP(a, b))
            gates.extend(CR(d, a, b, sign) for d in range(2, n + 1) for sign in (1, -1))
        if n > 6:
            gates = [gates[i] for i in rng.choice(len(gates), size=40, replace=False)]
        for g in gates:
            assert abs(np.linalg.norm(apply_gate(s, g)) - 1) < 1e-12


def touched_mask(n, gate):
    bits = 0
    for q in gate.qubits:
        bits |= 1 << (n - q)
    return bits


def test_gate_locality(rng):
    # an amplitude may change only if some index differing from it in the
    # touched bits carries different data; with a delta input that means
    # the output support stays inside the orbit of the touched bits
    n = 5
    for g in [H(3), CR(4, 2, 5), SWAP(1, 4), CR(2, 5, 1, -1)]:
        mask = touched_mask(n, g)
        for j in range(1 << n):
            out = apply_gate(basis_state(n, j), g)
            for k in np.flatnonzero(out):
                assert (k ^ j) & ~mask == 0


def test_gate_leaves_untouched_subspace_exactly(rng):
    n = 4
    s = random_state(n, rng)
    # CR only touches amplitudes with both bits set
    out = apply_gate(s, CR(3, 2, 4))
    for j in range(1 << n):
        if not ((j >> 2) & 1 and j & 1):
            assert out[j] == s[j]


def test_empty_circuit_is_identity(rng):
    s = random_state(3, rng)
    assert np.array_equal(apply_circuit(s, Circuit(3)), s)
    assert_allclose(unitary_of(Circuit(2)), np.eye(4))


def test_hadamard_squared(rng):
    s = random_state(1, rng)
    assert np.max(np.abs(apply_circuit(s, Circuit(1, [H(1), H(1)])) - s)) < 1e-12


def test_qft3_on_basis_one_matches_oracle():
    out = apply_circuit(basis_state(3, 1), build_qft(3))
    assert np.max(np.abs(out - dft_direct(basis_state(3, 1)))) < 1e-12


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        apply_circuit(basis_state(2, 0), build_qft(3))


def test_norm_preserved_over_long_circuit(rng):
    n = 6
    gates = []
    while len(gates) < 1000:
        gates.extend(build_qft(n).gates)
    c = Circuit(n, gates[:1000])
    out = apply_circuit(random_state(n, rng), c)
    assert abs(np.linalg.norm(out) - 1) < 1e-10


def test_hadamard_matrix():
    assert_allclose(unitary_of(Circuit(1, [H(1)])), S * np.array([[1, 1], [1, -1]]))


def test_unitary_of_qft3_is_dft_matrix():
    assert np.max(np.abs(unitary_of(build_qft(3)) - dft_matrix(3))) < 1e-10


def test_unitary_columns_are_simulated_basis_states():
    c = build_mqft(4)
    u = unitary_of(c)
    for k in range(16):
        assert np.array_equal(u[:, k], apply_circuit(basis_state(4, k), c))


def test_unitary_of_size_guard():
    with pytest.raises(ValueError, match="n <= 10"):
        unitary_of(Circuit(11))
    assert unitary_of(Circuit(10)).shape == (1024, 1024)


@pytest.mark.parametrize("n", range(0, 9))
def test_qft_unitarity(n):
    u = unitary_of(build_qft(n))
    assert np.max(np.abs(u.conj().T @ u - np.eye(1 << n))) < 1e-10


def test_invert_examples():
    assert invert(Circuit(1, [H(1)])) == Circuit(1, [H(1)])
    c = Circuit(3, [H(1), CR(2, 1, 2), SWAP(2, 3), CR(3, 3, 1, -1)])
    assert invert(c).gates == (CR(3, 3, 1, 1), SWAP(2, 3), CR(2, 1, 2, -1), H(1))
    assert invert(invert(c)) == c


def test_qft4_inverse_round_trip(rng):
    c = build_qft(4)
    s = random_state(4, rng)
    assert np.max(np.abs(apply_circuit(apply_circuit(s, c), invert(c)) - s)) < 1e-10


@pytest.mark.parametrize("seed", range(10))
def test_invert_is_adjoint(seed):
    rng = np.random.default_rng(seed)
    c = random_circuit(rng, n_max=6, max_gates=20)
    u = unitary_of(c)
    assert np.max(np.abs(unitary_of(invert(c)) - u.conj().T)) < 1e-10


@pytest.mark.parametrize("n", range(2, 7))
def test_cr_run_order_is_irrelevant(n):
    stage = [CR(d, n + 1 - d, n) for d in range(n, 1, -1)]
    reference = unitary_of(Circuit(n, stage))
    for perm in itertools.islice(itertools.permutations(stage), 24):
        assert np.max(np.abs(unitary_of(Circuit(n, perm)) - reference)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_random_circuits_preserve_norm(seed):
    rng = np.random.default_rng(seed)
    c = random_circuit(rng, n_max=8, max_gates=30)
    out = apply_circuit(random_state(c.n, rng), c)
    assert abs(np.linalg.norm(out) - 1) < 1e-10


def test_random_state_is_normalized_and_seeded():
    a = random_state(5, np.random.default_rng(7))
    b = random_state(5, np.random.default_rng(7))
    assert np.array_equal(a, b)
    assert abs(np.linalg.norm(a) - 1) < 1e-14
