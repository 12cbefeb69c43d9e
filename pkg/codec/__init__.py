"""
Codec package: polar transform/encoder, code construction, CRC and the AWGN channel.
"""

from .polar_core import (
    PolarCodeSpec, bit_reversal_permutation, polar_transform, kronecker_butterfly,
    encode, extract_information,
)
from .construction import ReliabilityProfile, construct_reliability, plan_code, build_code
from .crc import CrcSpec, DEFAULT_CRC, crc_attach, crc_check, crc_check_batch, parse_crc_flag
from .channel import ChannelParams, transmit, frame_generator, noise_variance

__all__ = [
    'PolarCodeSpec', 'bit_reversal_permutation', 'polar_transform', 'kronecker_butterfly',
    'encode', 'extract_information',
    'ReliabilityProfile', 'construct_reliability', 'plan_code', 'build_code',
    'CrcSpec', 'DEFAULT_CRC', 'crc_attach', 'crc_check', 'crc_check_batch', 'parse_crc_flag',
    'ChannelParams', 'transmit', 'frame_generator', 'noise_variance',
]
