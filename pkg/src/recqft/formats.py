"""Text formats: native circuit listing, state/coefficient documents, QASM export.

Native circuit grammar (strict, newline-terminated, single spaces)::

    qubits <n>
    H <t>
    CR <d> <c> <t>
    CR- <d> <c> <t>
    SWAP <a> <b>

``CR-`` is the conjugate phase gate. Integers are canonical decimals, so each
circuit has exactly one serialization.
"""

from __future__ import annotations

import json
import math
import re

import numpy as np

from .circuit import CR, H, SWAP, Circuit
from .fft import order_of

__all__ = [
    "FormatError",
    "serialize_circuit",
    "parse_circuit",
    "serialize_state",
    "parse_state",
    "export_qasm",
    "format_real",
]

_INT = r"(0|[1-9][0-9]*)"
_HEADER = re.compile(rf"qubits {_INT}")
_GATE_PATTERNS = {
    "H": re.compile(rf"H {_INT}"),
    "CR": re.compile(rf"CR {_INT} {_INT} {_INT}"),
    "CR-": re.compile(rf"CR- {_INT} {_INT} {_INT}"),
    "SWAP": re.compile(rf"SWAP {_INT} {_INT}"),
}


class FormatError(ValueError):
    """Malformed input document; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"{message}, line {line}")


def format_real(x: float) -> str:
    """17 significant digits, always written as a float literal."""
    text = format(float(x), ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def serialize_circuit(c: Circuit) -> str:
    lines = [f"qubits {c.n}"]
    for g in c.gates:
        if isinstance(g, H):
            lines.append(f"H {g.target}")
        elif isinstance(g, CR):
            mnemonic = "CR" if g.sign == 1 else "CR-"
            lines.append(f"{mnemonic} {g.d} {g.control} {g.target}")
        else:
            lines.append(f"SWAP {g.a} {g.b}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Inverse of :func:`serialize_circuit`; anything else raises :class:`FormatError`."""
    if not text.endswith("\n"):
        raise FormatError("missing final newline", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise FormatError("malformed header, expected 'qubits <n>'", 1)
    n = int(header.group(1))

    gates = []
    for lineno, line in enumerate(lines[1:], start=2):
        mnemonic = line.split(" ", 1)[0]
        pattern = _GATE_PATTERNS.get(mnemonic)
        if pattern is None:
            raise FormatError(f"unknown mnemonic {mnemonic!r}", lineno)
        match = pattern.fullmatch(line)
        if match is None:
            raise FormatError(f"malformed {mnemonic} line", lineno)
        args = [int(v) for v in match.groups()]
        qubits = args[1:] if mnemonic.startswith("CR") else args
        if any(not 1 <= q <= n for q in qubits):
            raise FormatError("qubit index out of range", lineno)
        if mnemonic == "H":
            gates.append(H(args[0]))
        elif mnemonic == "SWAP":
            if args[0] == args[1]:
                raise FormatError("SWAP of a qubit with itself", lineno)
            gates.append(SWAP(*args))
        else:
            d, control, target = args
            if not 2 <= d <= n:
                raise FormatError(f"phase order d={d} outside [2, {n}]", lineno)
            if control == target:
                raise FormatError("CR control equals target", lineno)
            gates.append(CR(d, control, target, 1 if mnemonic == "CR" else -1))
    return Circuit(n, gates)


def serialize_state(vec) -> str:
    """JSON document with ``n`` and ``amplitudes`` as ``[re, im]`` pairs.

    Works for state vectors and unnormalized coefficient vectors alike.
    """
    arr = np.asarray(vec, dtype=np.complex128)
    n = order_of(arr)
    if not np.all(np.isfinite(arr)):
        raise ValueError("cannot serialize a vector containing NaN or Inf")
    rows = ",\n".join(
        f"    [{format_real(z.real)}, {format_real(z.imag)}]" for z in arr
    )
    return f'{{\n  "n": {n},\n  "amplitudes": [\n{rows}\n  ]\n}}\n'


def parse_state(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not a JSON document: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or set(doc) != {"n", "amplitudes"}:
        raise FormatError("document must have exactly the fields 'n' and 'amplitudes'")
    n, amps = doc["n"], doc["amplitudes"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise FormatError(f"field 'n' must be a non-negative integer, got {n!r}")
    if not isinstance(amps, list) or len(amps) != 1 << n:
        raise FormatError(f"field 'amplitudes' must list exactly {1 << n} entries")
    out = np.empty(1 << n, dtype=np.complex128)
    for i, pair in enumerate(amps):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise FormatError(f"amplitude {i} must be a [re, im] pair of numbers")
        out[i] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(out)):
        raise FormatError("amplitudes must be finite")
    return out


def export_qasm(c: Circuit) -> str:
    """OpenQASM 2.0 listing; circuit qubit ``i`` becomes ``q[i-1]``."""
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "// qubit i is q[i-1]; q[0] is the most significant bit of the basis index",
        f"qreg q[{c.n}];",
    ]
    for g in c.gates:
        if isinstance(g, H):
            lines.append(f"h q[{g.target - 1}];")
        elif isinstance(g, CR):
            angle = g.sign * 2.0 * math.pi / 2**g.d
            lines.append(f"cp({format_real(angle)}) q[{g.control - 1}],q[{g.target - 1}];")
        else:
            lines.append(f"swap q[{g.a - 1}],q[{g.b - 1}];")
    return "\n".join(lines) + "\n"
