"""
CRC attach/check over bit vectors for CRC-aided list decoding.

Bits are processed MSB-first in the order given. The default spec is
CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF, no reflection, xorout 0).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from errors import CrcError

logger = logging.getLogger(__name__)

VALID_WIDTHS = (8, 16, 24, 32)


@dataclass(frozen=True)
class CrcSpec:
    """CRC parameters in the usual Rocksoft-model form."""
    width: int = 16
    polynomial: int = 0x1021
    initial: int = 0xFFFF
    final_xor: int = 0x0000
    reflect_in: bool = False
    reflect_out: bool = False

    def __post_init__(self):
        if self.width not in VALID_WIDTHS:
            raise CrcError(f"CRC width must be one of {VALID_WIDTHS}, got {self.width}")
        limit = 1 << self.width
        for name in ('polynomial', 'initial', 'final_xor'):
            value = getattr(self, name)
            if not 0 <= value < limit:
                raise CrcError(f"CRC {name} 0x{value:X} does not fit in {self.width} bits")

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1

    def to_dict(self) -> dict:
        return {
            'width': self.width,
            'polynomial': f"0x{self.polynomial:0{self.width // 4}X}",
            'initial': f"0x{self.initial:0{self.width // 4}X}",
            'final_xor': f"0x{self.final_xor:0{self.width // 4}X}",
            'reflect_in': self.reflect_in,
            'reflect_out': self.reflect_out,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CrcSpec':
        def as_int(value):
            return int(value, 0) if isinstance(value, str) else int(value)

        try:
            return cls(
                width=int(data.get('width', 16)),
                polynomial=as_int(data.get('polynomial', 0x1021)),
                initial=as_int(data.get('initial', 0xFFFF)),
                final_xor=as_int(data.get('final_xor', 0)),
                reflect_in=bool(data.get('reflect_in', False)),
                reflect_out=bool(data.get('reflect_out', False)),
            )
        except (TypeError, ValueError) as e:
            if isinstance(e, CrcError):
                raise
            raise CrcError(f"Invalid CRC spec {data}: {e}") from e


DEFAULT_CRC = CrcSpec()


def parse_crc_flag(text: str) -> CrcSpec:
    """
    Parse a '<width:poly:init>' flag value, e.g. '16:0x1021:0xFFFF'.

    Raises:
        CrcError: If the value is malformed
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise CrcError(f"CRC flag must look like <width:poly:init>, got '{text}'")
    try:
        width, poly, init = int(parts[0], 0), int(parts[1], 0), int(parts[2], 0)
    except ValueError:
        raise CrcError(f"CRC flag fields must be integers, got '{text}'") from None
    return CrcSpec(width=width, polynomial=poly, initial=init)


@lru_cache(maxsize=16)
def _byte_table(width: int, polynomial: int) -> Tuple[int, ...]:
    top = 1 << (width - 1)
    mask = (1 << width) - 1
    table = []
    for byte in range(256):
        reg = byte << (width - 8)
        for _ in range(8):
            reg = ((reg << 1) ^ polynomial) if reg & top else (reg << 1)
            reg &= mask
        table.append(reg)
    return tuple(table)


def _reflect(value: int, width: int) -> int:
    result = 0
    for _ in range(width):
        result = (result << 1) | (value & 1)
        value >>= 1
    return result


def _input_order(bits: np.ndarray, spec: CrcSpec) -> np.ndarray:
    if not spec.reflect_in:
        return bits
    # Reflected input: each 8-bit chunk (and a trailing partial chunk) LSB-first
    chunks = [bits[i:i + 8][::-1] for i in range(0, bits.size, 8)]
    return np.concatenate(chunks) if chunks else bits


def _register(bits: np.ndarray, spec: CrcSpec) -> int:
    bits = _input_order(np.asarray(bits, dtype=np.uint8) & 1, spec)
    table = _byte_table(spec.width, spec.polynomial)
    width, mask, top = spec.width, spec.mask, 1 << (spec.width - 1)
    reg = spec.initial

    whole = bits.size - bits.size % 8
    if whole:
        for byte in np.packbits(bits[:whole]).tolist():
            reg = ((reg << 8) & mask) ^ table[((reg >> (width - 8)) ^ byte) & 0xFF]
    for bit in bits[whole:].tolist():
        reg ^= bit << (width - 1)
        reg = ((reg << 1) ^ spec.polynomial) if reg & top else (reg << 1)
        reg &= mask

    if spec.reflect_out:
        reg = _reflect(reg, width)
    return reg ^ spec.final_xor


def crc_compute(message_bits, spec: CrcSpec = DEFAULT_CRC) -> int:
    """Checksum of a bit vector as an integer."""
    return _register(message_bits, spec)


def _to_bits(value: int, width: int) -> np.ndarray:
    return np.array([(value >> (width - 1 - i)) & 1 for i in range(width)], dtype=np.uint8)


def crc_attach(message_bits, spec: CrcSpec = DEFAULT_CRC) -> np.ndarray:
    """
    Append the checksum bits (MSB first) to the message.

    Raises:
        CrcError: If the message is empty
    """
    message = np.asarray(message_bits, dtype=np.uint8).ravel() & 1
    if message.size == 0:
        raise CrcError("Cannot attach a CRC to an empty message")
    return np.concatenate([message, _to_bits(_register(message, spec), spec.width)])


def crc_check(bits, spec: CrcSpec = DEFAULT_CRC) -> bool:
    """
    True iff the trailing width bits equal the checksum of the prefix.

    Raises:
        CrcError: If the vector is not longer than the CRC width
    """
    bits = np.asarray(bits, dtype=np.uint8).ravel() & 1
    if bits.size <= spec.width:
        raise CrcError(f"Vector of {bits.size} bits is too short for a {spec.width}-bit CRC")
    checksum = _register(bits[:-spec.width], spec)
    return bool(np.array_equal(_to_bits(checksum, spec.width), bits[-spec.width:]))


@lru_cache(maxsize=16)
def _affine_map(spec: CrcSpec, length: int) -> Tuple[np.ndarray, np.ndarray]:
    # The checksum is affine over GF(2): crc(m) = A m + c
    offset = _to_bits(_register(np.zeros(length, dtype=np.uint8), spec), spec.width)
    columns = np.empty((length, spec.width), dtype=np.float32)
    unit = np.zeros(length, dtype=np.uint8)
    for i in range(length):
        unit[i] = 1
        columns[i] = _to_bits(_register(unit, spec), spec.width) ^ offset
        unit[i] = 0
    columns.setflags(write=False)
    offset.setflags(write=False)
    return columns, offset


def crc_check_batch(bit_rows, spec: CrcSpec = DEFAULT_CRC) -> np.ndarray:
    """
    Vectorized crc_check over the rows of a 2-D bit array.

    Returns:
        np.ndarray: Boolean pass flag per row
    """
    rows = np.atleast_2d(np.asarray(bit_rows, dtype=np.uint8))
    length = rows.shape[1] - spec.width
    if length <= 0:
        raise CrcError(f"Vectors of {rows.shape[1]} bits are too short for a {spec.width}-bit CRC")
    columns, offset = _affine_map(spec, length)
    syndrome = (rows[:, :length].astype(np.float32) @ columns).astype(np.int64) & 1
    syndrome ^= offset
    return np.all(syndrome == rows[:, length:], axis=1)
