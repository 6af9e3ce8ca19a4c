"""Oracle checks behind ``recqft verify``.

Every check compares a construction against :func:`recqft.fft.dft_direct`
and records the worst absolute amplitude error. Random draws come from
``numpy.random.default_rng([seed, n, check_id])`` (PCG64), so each cell is
reproducible on its own, independent of which other cells run.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .circuit import Circuit, apply_circuit, basis_state, random_state
from .fft import OpCounter, butterfly_count, dft_direct, fft_recursive
from .qft import bit_reverse, build_mqft, build_qft, gate_report

__all__ = [
    "CheckResult",
    "EXHAUSTIVE_MAX_N",
    "run_checks",
    "check_circuit",
    "max_dft_error",
]

# basis states are enumerated exhaustively up to this order
EXHAUSTIVE_MAX_N = 8

_CHECK_IDS = {
    "qft-basis": 0,
    "qft-random": 1,
    "mqft-bitrev": 2,
    "fft-vs-dft": 3,
    "fft-ops": 4,
    "gate-count": 5,
    "against-basis": 6,
    "against-random": 7,
}


@dataclass(frozen=True)
class CheckResult:
    n: int
    check: str
    max_error: float
    passed: bool
    samples: int

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} n={self.n:<2d} {self.check:<14s} "
            f"max_err={self.max_error:.3e} samples={self.samples}"
        )

    def as_dict(self) -> dict:
        return asdict(self)


def _rng(seed: int, n: int, check: str) -> np.random.Generator:
    return np.random.default_rng([seed, n, _CHECK_IDS[check]])


def max_dft_error(transform, inputs) -> tuple[float, int]:
    """Worst amplitude error of ``transform(x)`` against ``dft_direct(x)``."""
    worst, count = 0.0, 0
    for x in inputs:
        worst = max(worst, float(np.max(np.abs(transform(x) - dft_direct(x)))))
        count += 1
    return worst, count


def _basis(n: int):
    return (basis_state(n, j) for j in range(1 << n))


def _randoms(n: int, trials: int, rng: np.random.Generator):
    return [random_state(n, rng) for _ in range(trials)]


def check_circuit(c: Circuit, trials: int, seed: int, tolerance: float) -> list[CheckResult]:
    """Check an arbitrary circuit against the DFT of its width."""
    n = c.n

    def simulate(s):
        return apply_circuit(s, c)

    results = []
    if n <= EXHAUSTIVE_MAX_N:
        err, count = max_dft_error(simulate, _basis(n))
        results.append(CheckResult(n, "against-basis", err, err <= tolerance, count))
    err, count = max_dft_error(simulate, _randoms(n, trials, _rng(seed, n, "against-random")))
    results.append(CheckResult(n, "against-random", err, err <= tolerance, count))
    return results


def _check_n(n: int, trials: int, seed: int, tolerance: float) -> list[CheckResult]:
    qft = build_qft(n)
    mqft = build_mqft(n)
    perm = np.array([bit_reverse(k, n) for k in range(1 << n)])
    results = []

    def qft_sim(s):
        return apply_circuit(s, qft)

    def mqft_sim(s):
        return apply_circuit(s, mqft)[perm]

    if n <= EXHAUSTIVE_MAX_N:
        err, count = max_dft_error(qft_sim, _basis(n))
        results.append(CheckResult(n, "qft-basis", err, err <= tolerance, count))
    err, count = max_dft_error(qft_sim, _randoms(n, trials, _rng(seed, n, "qft-random")))
    results.append(CheckResult(n, "qft-random", err, err <= tolerance, count))

    if n <= EXHAUSTIVE_MAX_N:
        inputs = list(_basis(n))
    else:
        inputs = _randoms(n, trials, _rng(seed, n, "mqft-bitrev"))
    err, count = max_dft_error(mqft_sim, inputs)
    results.append(CheckResult(n, "mqft-bitrev", err, err <= tolerance, count))

    err, count = max_dft_error(fft_recursive, _randoms(n, trials, _rng(seed, n, "fft-vs-dft")))
    results.append(CheckResult(n, "fft-vs-dft", err, err <= tolerance, count))

    counter = OpCounter()
    fft_recursive(np.zeros(1 << n), counter)
    miss = abs(counter.complex_mults - butterfly_count(n))
    results.append(CheckResult(n, "fft-ops", float(miss), miss == 0, 1))

    report = gate_report(n)
    miss = abs(report.mqft_count - n * (n + 1) // 2) + abs(report.swap_count - n // 2)
    results.append(CheckResult(n, "gate-count", float(miss), miss == 0, 1))
    return results


def run_checks(n_max: int, trials: int, seed: int, tolerance: float) -> list[CheckResult]:
    """All checks for ``n = 1..n_max``, ordered by ``(n, check)``."""
    results = []
    for n in range(1, n_max + 1):
        results.extend(_check_n(n, trials, seed, tolerance))
    return results
