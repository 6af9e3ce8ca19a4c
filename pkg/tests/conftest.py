import numpy as np
import pytest

from recqft.circuit import CR, H, SWAP, Circuit


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_coeffs(n, rng):
    size = 1 << n
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_circuit(rng, n_max=6, max_gates=12):
    """A random valid circuit with at least one qubit."""
    n = int(rng.integers(1, n_max + 1))
    gates = []
    for _ in range(int(rng.integers(0, max_gates + 1))):
        kinds = ["H"] if n == 1 else ["H", "CR", "SWAP"]
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "H":
            gates.append(H(int(rng.integers(1, n + 1))))
            continue
        a, b = (int(q) + 1 for q in rng.choice(n, size=2, replace=False))
        if kind == "SWAP":
            gates.append(SWAP(a, b))
        else:
            d = int(rng.integers(2, n + 1))
            gates.append(CR(d, a, b, int(rng.choice([1, -1]))))
    return Circuit(n, gates)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
