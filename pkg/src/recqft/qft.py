"""Recursive construction of the quantum Fourier transform circuit.

The modified transform ``mQFT_n`` is built from ``mQFT_{n-1}`` exactly the way
the radix-2 FFT is built from two half-size transforms: the lower-order
circuit runs on qubits ``1..n-1`` (the last qubit only tags the even/odd
half, so one application serves both halves), then a single stage on qubit
``n`` performs the butterfly. Its output comes out in bit-reversed order;
:func:`build_qft` restores the natural order with ``floor(n/2)`` swaps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import CR, H, SWAP, Circuit

__all__ = [
    "QftBuildReport",
    "build_mqft",
    "build_qft",
    "butterfly_stage",
    "gate_report",
    "bit_reverse",
]


def butterfly_stage(n: int) -> list:
    """Gates that turn the ``mQFT_{n-1} (x) 1`` output into ``mQFT_n`` output.

    After ``mQFT_{n-1}`` the wires ``1..n-1`` carry the bits of
    ``k' = k_2 ... k_n`` reversed, so bit ``k_d`` sits on wire ``n + 1 - d``.
    The stage applies ``R_n^{k_n} ... R_2^{k_2}`` to qubit ``n`` (rightmost
    factor first) and finishes with a Hadamard.
    """
    if n < 1:
        raise ValueError(f"stage order must be at least 1, got {n}")
    gates = [CR(d, n + 1 - d, n) for d in range(n, 1, -1)]
    gates.append(H(n))
    return gates


def build_mqft(n: int) -> Circuit:
    """Bit-reversing QFT on ``n`` qubits, ``n * (n + 1) / 2`` gates.

    ``sum_j a_j |j>`` maps to ``sum_k b_k |bit_reverse(k)>`` where ``b`` is the
    unitary DFT of ``a``.
    """
    if n < 0:
        raise ValueError(f"qubit count must be non-negative, got {n}")
    return Circuit(n, _mqft_gates(n))


def _mqft_gates(n: int) -> list:
    if n == 0:
        return []
    # embedding on qubits 1..n-1 leaves every gate of the inner circuit unchanged
    return _mqft_gates(n - 1) + butterfly_stage(n)


def build_qft(n: int) -> Circuit:
    """Standard-order QFT: :func:`build_mqft` followed by the reversal swaps."""
    mqft = build_mqft(n)
    swaps = [SWAP(i, n + 1 - i) for i in range(1, n // 2 + 1)]
    return Circuit(n, [*mqft.gates, *swaps])


@dataclass(frozen=True)
class QftBuildReport:
    n: int
    gate_count_total: int
    hadamard_count: int
    cr_count: int
    swap_count: int

    @property
    def mqft_count(self) -> int:
        return self.hadamard_count + self.cr_count


def gate_report(n: int) -> QftBuildReport:
    """Count the gates of :func:`build_qft` by kind."""
    c = build_qft(n)
    kinds = [type(g) for g in c.gates]
    return QftBuildReport(
        n=n,
        gate_count_total=len(kinds),
        hadamard_count=kinds.count(H),
        cr_count=kinds.count(CR),
        swap_count=kinds.count(SWAP),
    )


def bit_reverse(j: int, n: int) -> int:
    """Reverse the ``n``-bit binary expansion of ``j``.

    >>> bit_reverse(1, 3)
    4
    """
    if n < 0:
        raise ValueError(f"bit width must be non-negative, got {n}")
    if not 0 <= j < 1 << n:
        raise ValueError(f"{j} does not fit in {n} bits")
    out = 0
    for _ in range(n):
        out = (out << 1) | (j & 1)
        j >>= 1
    return out
