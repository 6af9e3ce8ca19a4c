"""Gate/circuit data model and dense state-vector simulation.

Qubits are numbered ``1..n`` and qubit 1 is the most significant bit of the
basis index: amplitude ``amps[j]`` belongs to ``|j_1>|j_2>...|j_n>`` with
``j = j_1 2**(n-1) + ... + j_n``. Every index computation below follows from
that single convention (qubit ``q`` is tensor axis ``q - 1``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .fft import order_of, root_of_unity

__all__ = [
    "H",
    "CR",
    "SWAP",
    "Gate",
    "Circuit",
    "MAX_UNITARY_QUBITS",
    "apply_gate",
    "apply_circuit",
    "invert",
    "unitary_of",
    "basis_state",
    "random_state",
    "as_state",
]

MAX_UNITARY_QUBITS = 10

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class H:
    target: int

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.target,)

    def check(self, n: int) -> None:
        _check_qubits(self.qubits, n)


@dataclass(frozen=True)
class CR:
    """Controlled phase ``diag(1, 1, 1, exp(sign * 2*pi*i / 2**d))``.

    The gate is diagonal and symmetric in its two qubits; ``control`` and
    ``target`` only record how the circuit was written. ``sign=-1`` is the
    adjoint, produced by :func:`invert`.
    """

    d: int
    control: int
    target: int
    sign: int = 1

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.control, self.target)

    @property
    def phase(self) -> complex:
        return root_of_unity(self.d, self.sign)

    def check(self, n: int) -> None:
        _check_qubits(self.qubits, n)
        if self.control == self.target:
            raise ValueError(f"CR control and target coincide (qubit {self.control})")
        if not 2 <= self.d <= n:
            raise ValueError(f"CR phase order d={self.d} outside [2, {n}]")
        if self.sign not in (1, -1):
            raise ValueError(f"CR sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class SWAP:
    a: int
    b: int

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.a, self.b)

    def check(self, n: int) -> None:
        _check_qubits(self.qubits, n)
        if self.a == self.b:
            raise ValueError(f"SWAP of qubit {self.a} with itself")


Gate = Union[H, CR, SWAP]


def _check_qubits(qubits: tuple[int, ...], n: int) -> None:
    for q in qubits:
        if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
            raise TypeError(f"qubit index must be an integer, got {q!r}")
        if not 1 <= q <= n:
            raise ValueError(f"qubit index {q} out of range 1..{n}")


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list on ``n`` qubits; ``gates[0]`` is applied first."""

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"qubit count must be non-negative, got {self.n}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if not isinstance(g, (H, CR, SWAP)):
                raise TypeError(f"not a gate: {g!r}")
            g.check(self.n)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if other.n != self.n:
            raise ValueError(f"cannot concatenate circuits on {self.n} and {other.n} qubits")
        return Circuit(self.n, self.gates + other.gates)


def as_state(amps, check_norm: bool = False, atol: float = 1e-10) -> np.ndarray:
    """Convert ``amps`` to a ``complex128`` state vector, optionally checking its norm."""
    arr = np.array(amps, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    order_of(arr)
    if check_norm:
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > atol:
            raise ValueError(f"state norm {norm!r} differs from 1 by more than {atol}")
    return arr


def basis_state(n: int, j: int) -> np.ndarray:
    """The computational basis vector ``|j>`` on ``n`` qubits."""
    size = 1 << n
    if not 0 <= j < size:
        raise ValueError(f"basis index {j} out of range 0..{size - 1}")
    out = np.zeros(size, dtype=np.complex128)
    out[j] = 1.0
    return out


def random_state(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state: ``2**(n+1)`` standard normals, then normalized."""
    size = 1 << n
    z = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return z / np.linalg.norm(z)


def _act(tensor: np.ndarray, g: Gate) -> np.ndarray:
    # tensor has one axis per qubit followed by one batch axis
    if isinstance(g, H):
        axis = g.target - 1
        lo = np.take(tensor, 0, axis=axis)
        hi = np.take(tensor, 1, axis=axis)
        return np.stack(((lo + hi) * _INV_SQRT2, (lo - hi) * _INV_SQRT2), axis=axis)
    if isinstance(g, CR):
        out = tensor.copy()
        idx = [slice(None)] * tensor.ndim
        idx[g.control - 1] = 1
        idx[g.target - 1] = 1
        out[tuple(idx)] *= g.phase
        return out
    if isinstance(g, SWAP):
        return np.ascontiguousarray(np.swapaxes(tensor, g.a - 1, g.b - 1))
    raise TypeError(f"not a gate: {g!r}")


def _run(columns: np.ndarray, n: int, gates) -> np.ndarray:
    batch = columns.shape[1]
    tensor = columns.reshape((2,) * n + (batch,))
    for g in gates:
        tensor = _act(tensor, g)
    return tensor.reshape(1 << n, batch)


def apply_gate(state, g: Gate) -> np.ndarray:
    """Return the state after ``g``; the input is left untouched.

    H mixes amplitude pairs that differ only in the target bit, CR multiplies
    amplitudes whose two bits are both 1 by its phase, and SWAP exchanges the
    two bits of every index.
    """
    psi = as_state(state)
    n = order_of(psi)
    g.check(n)
    return _run(psi[:, None], n, (g,))[:, 0]


def apply_circuit(state, c: Circuit) -> np.ndarray:
    psi = as_state(state)
    if len(psi) != 1 << c.n:
        raise ValueError(f"state of length {len(psi)} does not match a {c.n}-qubit circuit")
    return _run(psi[:, None], c.n, c.gates)[:, 0]


def invert(c: Circuit) -> Circuit:
    """Adjoint circuit: reversed gate order with every CR phase conjugated."""
    gates = []
    for g in reversed(c.gates):
        if isinstance(g, CR):
            g = CR(g.d, g.control, g.target, -g.sign)
        gates.append(g)
    return Circuit(c.n, gates)


def unitary_of(c: Circuit) -> np.ndarray:
    """Dense matrix of ``c``; column ``k`` is the image of ``|k>``.

    Refuses circuits wider than :data:`MAX_UNITARY_QUBITS` qubits.
    """
    if c.n > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"unitary_of is limited to n <= {MAX_UNITARY_QUBITS} qubits, got n={c.n}"
        )
    return _run(np.eye(1 << c.n, dtype=np.complex128), c.n, c.gates)
