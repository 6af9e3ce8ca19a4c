"""Classical discrete Fourier transform: direct oracle and radix-2 recursion.

Coefficient vectors are plain 1-D ``complex128`` arrays of length ``2**n``.
Index ``j`` holds ``a_j``, with ``j = j_1 2**(n-1) + ... + j_n`` (bit 1 is
the most significant). The transform uses the unitary normalization

    b_k = 2**(-n/2) * sum_j zeta_n**(j*k) * a_j,    zeta_n = exp(2*pi*i / 2**n)

which is the same matrix the quantum circuits in :mod:`recqft.qft` realize.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "OpCounter",
    "butterfly_count",
    "as_coeffs",
    "order_of",
    "root_of_unity",
    "roots_of_unity",
    "dft_direct",
    "dft_matrix",
    "split_even_odd",
    "interleave",
    "fft_recursive",
]

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass
class OpCounter:
    """Tally of arithmetic performed by :func:`fft_recursive`.

    ``complex_mults`` counts twiddle products (one per butterfly) and
    ``complex_adds`` counts the two additions of each butterfly. The
    ``1/sqrt(2)`` normalization multiplies are kept apart in ``scalings`` so
    the butterfly counts follow the closed form ``n * 2**(n-1)`` exactly.
    """

    complex_mults: int = 0
    complex_adds: int = 0
    scalings: int = 0


def butterfly_count(n: int) -> int:
    """Closed-form twiddle-product count of an order-``n`` recursion.

    Solves ``M(n) = 2 M(n-1) + 2**(n-1)``, ``M(0) = 0``.
    """
    return n * 2 ** (n - 1) if n > 0 else 0


def order_of(values) -> int:
    """Return ``n`` such that ``len(values) == 2**n``."""
    size = len(values)
    if size < 1 or size & (size - 1):
        raise ValueError(f"vector length must be a power of two, got {size}")
    return size.bit_length() - 1


def as_coeffs(values) -> np.ndarray:
    """Validate and convert ``values`` to a fresh ``complex128`` vector."""
    arr = np.array(values, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    order_of(arr)
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector contains NaN or Inf")
    return arr


def roots_of_unity(n: int, powers) -> np.ndarray:
    """Vectorized :func:`root_of_unity`; ``powers`` is an integer array."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    size = 1 << n
    # reduce in integers first so large powers lose no phase precision
    reduced = np.mod(np.asarray(powers, dtype=np.int64), size)
    angle = (2.0 * np.pi / size) * reduced
    return np.cos(angle) + 1j * np.sin(angle)


def root_of_unity(n: int, power: int) -> complex:
    """``zeta_n ** power`` where ``zeta_n = exp(2*pi*i / 2**n)``."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    # Python ints reduce exactly even beyond the int64 range
    return complex(roots_of_unity(n, power % (1 << n)))


def dft_direct(a) -> np.ndarray:
    """Evaluate the transform by the literal double sum over ``j`` and ``k``.

    This is the reference oracle: it shares no code path with the recursion
    beyond the root-of-unity table, and costs ``O(4**n)``.
    """
    a = as_coeffs(a)
    n = order_of(a)
    size = 1 << n
    table = roots_of_unity(n, np.arange(size))
    j = np.arange(size, dtype=np.int64)
    out = np.empty(size, dtype=np.complex128)
    for k in range(size):
        out[k] = np.dot(table[(j * k) % size], a)
    return out * 2.0 ** (-n / 2)


def dft_matrix(n: int) -> np.ndarray:
    """Dense ``2**n x 2**n`` transform matrix, entry ``(k, j) = 2**(-n/2) zeta_n**(jk)``."""
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    table = roots_of_unity(n, idx)
    return table[np.outer(idx, idx) % size] * 2.0 ** (-n / 2)


def split_even_odd(a) -> tuple[np.ndarray, np.ndarray]:
    """Split coefficients into even-index and odd-index halves.

    With ``P(X) = P_even(X**2) + X * P_odd(X**2)`` the halves are the
    coefficient lists of ``P_even`` and ``P_odd``.
    """
    a = np.asarray(a, dtype=np.complex128)
    if order_of(a) == 0:
        raise ValueError("cannot split a vector of order 0")
    return a[0::2].copy(), a[1::2].copy()


def interleave(even, odd) -> np.ndarray:
    """Inverse of :func:`split_even_odd`."""
    even = np.asarray(even, dtype=np.complex128)
    odd = np.asarray(odd, dtype=np.complex128)
    if even.shape != odd.shape:
        raise ValueError(f"halves differ in shape: {even.shape} vs {odd.shape}")
    out = np.empty(2 * len(even), dtype=np.complex128)
    out[0::2] = even
    out[1::2] = odd
    return out


def fft_recursive(a, counter: OpCounter | None = None) -> np.ndarray:
    """Divide-and-conquer transform via the even/odd polynomial split.

    Each level computes the two half-order transforms, then combines output
    ``k`` and ``k + 2**(n-1)`` from one twiddle product, since
    ``zeta_n**(2**(n-1)) = -1``. One ``1/sqrt(2)`` factor is applied per
    level, so no final ``2**(-n/2)`` pass is needed.

    Args:
        a: coefficient vector of length ``2**n``.
        counter: optional :class:`OpCounter`, updated in place.

    Returns:
        The transformed vector; agrees with :func:`dft_direct`.
    """
    a = as_coeffs(a)
    if counter is None:
        counter = OpCounter()
    return _fft(a, order_of(a), counter)


def _fft(a: np.ndarray, n: int, counter: OpCounter) -> np.ndarray:
    if n == 0:
        return a.copy()
    even, odd = split_even_odd(a)
    even_hat = _fft(even, n - 1, counter)
    odd_hat = _fft(odd, n - 1, counter)

    half = 1 << (n - 1)
    twiddled = roots_of_unity(n, np.arange(half)) * odd_hat
    counter.complex_mults += half

    out = np.empty(2 * half, dtype=np.complex128)
    out[:half] = even_hat + twiddled
    out[half:] = even_hat - twiddled
    counter.complex_adds += 2 * half

    out *= _INV_SQRT2
    counter.scalings += 2 * half
    return out
