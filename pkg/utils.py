"""
Parameter validation and plain-text bit/LLR file IO shared by the commands.
"""

import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from codec.polar_core import is_power_of_two
from errors import EncodingError

# Validation constants
MAX_BLOCK_EXPONENT = 20
VALID_BLOCK_LENGTHS = [1 << n for n in range(1, MAX_BLOCK_EXPONENT + 1)]


def validate_code_parameters(N=None, K=None, m=None, good_fraction=None, list_size=None):
    """
    Validate code and decoder parameters given on the command line.

    Args:
        N: Block length
        K: Information bits (CRC included)
        m: Group width
        good_fraction: Fraction of information bits treated as good
        list_size: List size L

    Returns:
        tuple: (is_valid, error_message)
    """
    if N is None:
        return False, "Parameter '--N' is required."
    if N not in VALID_BLOCK_LENGTHS:
        return False, f"N must be a power of two between 2 and {VALID_BLOCK_LENGTHS[-1]}, got {N}."

    if K is not None and not 1 <= K <= N:
        return False, f"K must be between 1 and N={N}, got {K}."

    if m is not None:
        if not is_power_of_two(m):
            return False, f"Group width m must be a power of two, got {m}."
        if N % m != 0:
            return False, f"Group width m={m} does not divide N={N}."

    if good_fraction is not None and not 0.0 <= good_fraction <= 1.0:
        return False, f"Good fraction must be in [0, 1], got {good_fraction}."

    if list_size is not None and list_size < 1:
        return False, f"List size must be >= 1, got {list_size}."

    return True, None


def parse_ebn0_list(text: str) -> List[float]:
    """
    Parse a comma separated Eb/N0 list such as '1,1.5,2'.

    Raises:
        ValueError: If the list is empty or an entry is not a number
    """
    items = [item.strip() for item in text.split(',') if item.strip()]
    if not items:
        raise ValueError("Eb/N0 list is empty")
    try:
        return [float(item) for item in items]
    except ValueError:
        raise ValueError(f"Eb/N0 list must contain numbers, got '{text}'") from None


def _content_lines(path: Path) -> List[str]:
    with open(path, 'r', encoding='utf-8') as f:
        return [line.split('#', 1)[0] for line in f]


def read_bits_file(path: Union[str, Path], expected_length: Optional[int] = None) -> np.ndarray:
    """
    Read a bit vector written as 0/1 characters; whitespace and '#' comments are ignored.

    Raises:
        EncodingError: Missing file, foreign characters or wrong length
    """
    path = Path(path)
    if not path.is_file():
        raise EncodingError(f"Bit file not found: {path}")
    text = re.sub(r'\s+', '', ''.join(_content_lines(path)))
    if set(text) - {'0', '1'}:
        raise EncodingError(f"Bit file {path} may only contain 0 and 1")
    bits = np.frombuffer(text.encode('ascii'), dtype=np.uint8) - ord('0')
    if expected_length is not None and bits.size != expected_length:
        raise EncodingError(f"Bit file {path} holds {bits.size} bits, expected {expected_length}")
    return bits.astype(np.uint8)


def write_bits_file(path: Union[str, Path], bits, line_width: int = 64) -> Path:
    """Write bits as 0/1 characters, line_width per line, LF endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = ''.join('1' if b else '0' for b in np.asarray(bits).ravel())
    lines = [text[i:i + line_width] for i in range(0, len(text), line_width)] or ['']
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('\n'.join(lines) + '\n')
    return path


def read_llr_file(path: Union[str, Path], expected_length: Optional[int] = None) -> np.ndarray:
    """
    Read LLRs separated by whitespace or commas; '#' starts a comment.

    Raises:
        EncodingError: Missing file, non-numeric entry or wrong length
    """
    path = Path(path)
    if not path.is_file():
        raise EncodingError(f"LLR file not found: {path}")
    tokens = [t for line in _content_lines(path) for t in re.split(r'[\s,]+', line) if t]
    try:
        llrs = np.array([float(t) for t in tokens], dtype=np.float64)
    except ValueError as e:
        raise EncodingError(f"LLR file {path} contains a non-numeric entry: {e}") from e
    if expected_length is not None and llrs.size != expected_length:
        raise EncodingError(f"LLR file {path} holds {llrs.size} values, expected {expected_length}")
    return llrs


def write_llr_file(path: Union[str, Path], llrs) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for value in np.asarray(llrs, dtype=np.float64).ravel():
            f.write(f"{value:.17g}\n")
    return path


def check_output_path(path: Union[str, Path]) -> Tuple[bool, Optional[str]]:
    """
    Check that an output path can be written before any work starts.

    Returns:
        tuple: (is_valid, error_message)
    """
    path = Path(path)
    if path.exists() and path.is_dir():
        return False, f"Output path {path} is a directory."
    parent = path.parent if str(path.parent) else Path('.')
    existing = parent
    while not existing.exists():
        existing = existing.parent
    if not existing.is_dir():
        return False, f"Output directory {parent} cannot be created."
    return True, None
