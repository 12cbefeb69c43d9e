"""
Polar transform, encoding and the static code definition.

Conventions: x = u · B_N · F^{⊗n} over GF(2) with F = [[1, 0], [1, 1]].
The encoder applies the bit-reversal B_N explicitly; the butterfly alone
computes v · F^{⊗n}.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from errors import CodeConstructionError, EncodingError

logger = logging.getLogger(__name__)


def is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


def log2_exact(value: int) -> int:
    """Exponent of a power of two; raises EncodingError otherwise."""
    if not is_power_of_two(int(value)):
        raise EncodingError(f"Length must be a power of two, got {value}")
    return int(value).bit_length() - 1


@lru_cache(maxsize=32)
def _bit_reversal_cached(n: int) -> np.ndarray:
    N = 1 << n
    perm = np.zeros(N, dtype=np.int64)
    indices = np.arange(N, dtype=np.int64)
    for bit in range(n):
        perm |= ((indices >> bit) & 1) << (n - 1 - bit)
    perm.setflags(write=False)
    return perm


def bit_reversal_permutation(n: int) -> np.ndarray:
    """
    Bit-reversal permutation of {0..2^n-1}.

    Args:
        n: Exponent (n >= 0)

    Returns:
        np.ndarray: perm[i] is i with its n-bit representation reversed
    """
    if n < 0:
        raise EncodingError(f"Exponent must be non-negative, got {n}")
    return _bit_reversal_cached(int(n))


def kronecker_butterfly(v) -> np.ndarray:
    """
    Compute v · F^{⊗n} over GF(2) with the in-place butterfly.

    Accepts a single vector or a batch with vectors along the last axis.
    F^{⊗n} is self-inverse over GF(2), so applying this twice returns v.
    """
    x = np.array(v, dtype=np.uint8, copy=True) & 1
    N = x.shape[-1]
    log2_exact(N)
    batch_shape = x.shape[:-1]
    h = 1
    while h < N:
        blocks = x.reshape(batch_shape + (N // (2 * h), 2, h))
        blocks[..., 0, :] ^= blocks[..., 1, :]
        h *= 2
    return x.reshape(batch_shape + (N,))


def polar_transform(u) -> np.ndarray:
    """
    Compute x = u · B_N · F^{⊗n} in O(N log N).

    Args:
        u: Bit vector of power-of-two length, or a batch of them (last axis)

    Returns:
        np.ndarray: Codeword(s), dtype uint8

    Raises:
        EncodingError: If the length is not a power of two
    """
    u = np.asarray(u, dtype=np.uint8)
    if u.ndim == 0 or u.shape[-1] == 0:
        raise EncodingError("Cannot transform an empty vector")
    n = log2_exact(u.shape[-1])
    return kronecker_butterfly(u[..., bit_reversal_permutation(n)])


@dataclass(frozen=True, eq=False)
class PolarCodeSpec:
    """
    Static definition of a polar code: frozen set, reliability ranking and the
    good/bad partition of the information bits.
    """
    n: int
    N: int
    K: int
    frozen_mask: np.ndarray
    reliability_order: np.ndarray
    good_mask: np.ndarray

    def __post_init__(self):
        if self.N != 1 << self.n:
            raise CodeConstructionError(f"N={self.N} is not 2^{self.n}")
        for name, dtype in (('frozen_mask', bool), ('reliability_order', np.int64), ('good_mask', bool)):
            array = np.array(getattr(self, name), dtype=dtype, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        if self.frozen_mask.shape != (self.N,) or self.good_mask.shape != (self.N,):
            raise CodeConstructionError("Masks must have length N")
        if int(np.count_nonzero(~self.frozen_mask)) != self.K:
            raise CodeConstructionError(
                f"Frozen mask leaves {int(np.count_nonzero(~self.frozen_mask))} information bits, expected K={self.K}"
            )
        order = self.reliability_order
        if order.shape != (self.N,) or not np.array_equal(np.sort(order), np.arange(self.N)):
            raise CodeConstructionError("Reliability order is not a permutation of 0..N-1")
        info_from_order = np.zeros(self.N, dtype=bool)
        info_from_order[order[:self.K]] = True
        if not np.array_equal(info_from_order, ~self.frozen_mask):
            raise CodeConstructionError("Information set must be the K most reliable indices")
        if np.any(self.good_mask & self.frozen_mask):
            raise CodeConstructionError("Good bits must be information bits")

    @property
    def info_indices(self) -> np.ndarray:
        """Information indices in ascending order (payload placement order)."""
        return np.flatnonzero(~self.frozen_mask)

    @property
    def good_indices(self) -> np.ndarray:
        return np.flatnonzero(self.good_mask)

    @property
    def bad_indices(self) -> np.ndarray:
        return np.flatnonzero(~self.frozen_mask & ~self.good_mask)

    @property
    def good_count(self) -> int:
        return int(np.count_nonzero(self.good_mask))

    @property
    def rate(self) -> float:
        return self.K / self.N

    def describe(self) -> dict:
        return {
            'N': self.N,
            'K': self.K,
            'good_bits': self.good_count,
            'bad_bits': self.K - self.good_count,
            'rate': self.rate,
        }


def encode(payload_bits, code: PolarCodeSpec) -> np.ndarray:
    """
    Place payload bits at the information indices (ascending) and transform.

    Args:
        payload_bits: Length-K bit vector, or a batch of them (last axis)
        code: Code definition

    Returns:
        np.ndarray: Length-N codeword(s)

    Raises:
        EncodingError: If the payload length differs from K
    """
    payload = np.asarray(payload_bits, dtype=np.uint8)
    if payload.ndim == 0 or payload.shape[-1] != code.K:
        got = payload.shape[-1] if payload.ndim else 0
        raise EncodingError(f"Payload length {got} does not match K={code.K}")
    u = np.zeros(payload.shape[:-1] + (code.N,), dtype=np.uint8)
    u[..., code.info_indices] = payload & 1
    return polar_transform(u)


def extract_information(u, code: PolarCodeSpec) -> np.ndarray:
    """Information bits of an input vector u, ascending index order."""
    u = np.asarray(u, dtype=np.uint8)
    if u.shape[-1] != code.N:
        raise EncodingError(f"Input vector length {u.shape[-1]} does not match N={code.N}")
    return u[..., code.info_indices]


def generator_matrix(n: int, dtype=np.uint8) -> np.ndarray:
    """Dense G_N = B_N F^{⊗n}; only meant for small N (oracles, ML search)."""
    N = 1 << n
    return polar_transform(np.eye(N, dtype=dtype))


def codebook(code: PolarCodeSpec, max_k: Optional[int] = 16) -> Tuple[np.ndarray, np.ndarray]:
    """All 2^K codewords, row i encodes the K-bit binary expansion of i (MSB first)."""
    if max_k is not None and code.K > max_k:
        raise EncodingError(f"Codebook enumeration limited to K <= {max_k}, got K={code.K}")
    messages = ((np.arange(1 << code.K)[:, None] >> np.arange(code.K - 1, -1, -1)) & 1).astype(np.uint8)
    return messages, encode(messages, code)
