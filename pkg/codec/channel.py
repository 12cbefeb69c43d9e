"""
BPSK over AWGN with LLR demodulation.

Generators are numpy's Philox4x64 counter-based bit generator seeded from a
SeedSequence of (seed, frame_index), so frame i is reproducible on its own.
Positive LLR favors bit 0.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from errors import ChannelError

logger = logging.getLogger(__name__)


def noise_variance(ebn0_db: float, code_rate: float) -> float:
    """sigma^2 = 1 / (2 R 10^(EbN0/10)) for unit-energy BPSK."""
    if not 0.0 < code_rate <= 1.0:
        raise ChannelError(f"Code rate must be in (0, 1], got {code_rate}")
    return 1.0 / (2.0 * code_rate * 10.0 ** (ebn0_db / 10.0))


@dataclass(frozen=True)
class ChannelParams:
    ebn0_db: float
    code_rate: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.code_rate <= 1.0:
            raise ChannelError(f"Code rate must be in (0, 1], got {self.code_rate}")
        if not self.sigma2 > 0.0:
            raise ChannelError(f"Eb/N0 of {self.ebn0_db} dB gives a non-positive noise variance")

    @property
    def sigma2(self) -> float:
        return noise_variance(self.ebn0_db, self.code_rate)


def frame_generator(seed: int, frame_index: int = 0) -> np.random.Generator:
    """Independent generator for one frame, derived from (seed, frame_index)."""
    sequence = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(frame_index)])
    return np.random.Generator(np.random.Philox(sequence))


def bpsk_modulate(codeword) -> np.ndarray:
    """Map bit b to symbol 1 - 2b."""
    return 1.0 - 2.0 * np.asarray(codeword, dtype=np.float64)


def llr_from_received(received, sigma2: float) -> np.ndarray:
    """LLR = 2 y / sigma^2."""
    if sigma2 <= 0.0:
        raise ChannelError(f"Noise variance must be positive, got {sigma2}")
    return 2.0 * np.asarray(received, dtype=np.float64) / sigma2


def transmit(codeword, params: ChannelParams, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Send a codeword over BPSK/AWGN and return channel LLRs.

    Args:
        codeword: Bit vector
        params: Channel parameters
        rng: Generator to draw noise from; defaults to frame_generator(params.seed)

    Returns:
        np.ndarray: LLR per codeword bit
    """
    codeword = np.asarray(codeword, dtype=np.uint8)
    if codeword.size == 0:
        raise ChannelError("Cannot transmit an empty codeword")
    if rng is None:
        rng = frame_generator(params.seed)
    sigma2 = params.sigma2
    received = bpsk_modulate(codeword) + rng.normal(0.0, np.sqrt(sigma2), size=codeword.shape)
    return llr_from_received(received, sigma2)
