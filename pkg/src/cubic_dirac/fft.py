"""Iterative radix-2 discrete Fourier transform along the last axis."""
from __future__ import annotations

import numpy as np

__all__ = ["dft", "idft", "is_power_of_two"]


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _bit_reversal(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def dft(values) -> np.ndarray:
    """Unnormalized forward transform ``X[m] = sum_j x[j] exp(-2 pi i j m / n)``.

    Leading axes are treated as a batch.  The length of the last axis must
    be a power of two.
    """
    a = np.asarray(values, dtype=complex)
    n = a.shape[-1]
    if not is_power_of_two(n):
        raise ValueError(f"transform length must be a power of two, got {n}")
    a = a[..., _bit_reversal(n)]
    batch = a.shape[:-1]
    size = 2
    while size <= n:
        half = size // 2
        twiddle = np.exp(-2j * np.pi * np.arange(half) / size)
        blocks = a.reshape(batch + (n // size, size))
        even = blocks[..., :half]
        odd = blocks[..., half:] * twiddle
        a = np.concatenate((even + odd, even - odd), axis=-1).reshape(batch + (n,))
        size *= 2
    return a


def idft(values) -> np.ndarray:
    """Inverse of :func:`dft`; carries the ``1/n`` factor."""
    a = np.asarray(values, dtype=complex)
    return np.conj(dft(np.conj(a))) / a.shape[-1]
