"""Recursive quantum Fourier transform circuits, checked against the classical DFT and FFT."""

from .circuit import (
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
from .fft import (
    OpCounter,
    butterfly_count,
    dft_direct,
    dft_matrix,
    fft_recursive,
    interleave,
    root_of_unity,
    split_even_odd,
)
from .formats import (
    FormatError,
    export_qasm,
    parse_circuit,
    parse_state,
    serialize_circuit,
    serialize_state,
)
from .qft import QftBuildReport, bit_reverse, build_mqft, build_qft, gate_report

__version__ = "0.1.0"
