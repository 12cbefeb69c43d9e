"""
Reliability-based code construction and the good/bad partition.

Three interchangeable reliability sources: Bhattacharyya recursion,
Gaussian-approximation density evolution, and an imported ranking file.
Indices follow the natural-order decoding tree: the most significant index
bit is the first polarization step.
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np
from scipy.optimize import brentq

from errors import CodeConstructionError
from .polar_core import PolarCodeSpec, is_power_of_two

logger = logging.getLogger(__name__)

METHODS = ('gaussian-approx', 'bhattacharyya', 'imported')

# CLI spellings
METHOD_ALIASES = {
    'ga': 'gaussian-approx',
    'gaussian-approx': 'gaussian-approx',
    'bhatta': 'bhattacharyya',
    'bhattacharyya': 'bhattacharyya',
    'file': 'imported',
    'imported': 'imported',
}

DEFAULT_DESIGN_EBN0_DB = 2.0


@dataclass(frozen=True)
class ReliabilityProfile:
    """Per-index reliability scores (larger = more reliable)."""
    scores: np.ndarray
    method: str
    design_param: float

    def __post_init__(self):
        scores = np.array(self.scores, dtype=np.float64, copy=True)
        if scores.ndim != 1 or not is_power_of_two(scores.size):
            raise CodeConstructionError(f"Reliability profile length must be a power of two, got {scores.size}")
        if not np.all(np.isfinite(scores)):
            raise CodeConstructionError("Reliability scores must be finite")
        scores.setflags(write=False)
        object.__setattr__(self, 'scores', scores)

    @property
    def N(self) -> int:
        return int(self.scores.size)

    def order(self) -> np.ndarray:
        """Indices from most to least reliable; equal scores by ascending index."""
        indices = np.arange(self.N)
        return np.lexsort((indices, -self.scores))


def normalize_method(method: str) -> str:
    try:
        return METHOD_ALIASES[method]
    except KeyError:
        raise CodeConstructionError(
            f"Unknown construction method '{method}'. Valid: {', '.join(sorted(METHOD_ALIASES))}"
        ) from None


def _polarize(initial: float, N: int, minus, plus) -> np.ndarray:
    # Each step interleaves children so that index = 2 * parent + branch.
    values = np.array([initial], dtype=np.float64)
    while values.size < N:
        children = np.empty(values.size * 2, dtype=np.float64)
        children[0::2] = minus(values)
        children[1::2] = plus(values)
        values = children
    return values


def bhattacharyya_parameters(N: int, z0: float) -> np.ndarray:
    """Bhattacharyya parameters of the N synthesized channels of a BEC-like Z0."""
    if not 0.0 <= z0 <= 1.0:
        raise CodeConstructionError(f"Bhattacharyya design parameter must be in [0, 1], got {z0}")
    return _polarize(z0, N, lambda z: 2 * z - z * z, lambda z: z * z)


# Piecewise approximation of phi(x) = 1 - E[tanh(l/2)], l ~ N(x, 2x)
_PHI_ALPHA = -0.4527
_PHI_BETA = 0.86
_PHI_GAMMA = 0.0218
_PHI_SWITCH = 10.0


def log_phi(x: float) -> float:
    """Natural log of the phi-function approximation used by density evolution."""
    if x <= 0.0:
        return 0.0
    if x < _PHI_SWITCH:
        return min(0.0, _PHI_ALPHA * x ** _PHI_BETA + _PHI_GAMMA)
    return 0.5 * math.log(math.pi / x) - x / 4.0 + math.log(1.0 - 10.0 / (7.0 * x))


def _check_node_mean(mean: float) -> float:
    """Mean LLR of the degraded (check-node) channel: phi^-1(1 - (1 - phi(m))^2)."""
    if mean <= 0.0:
        return 0.0
    lp = log_phi(mean)
    target = lp + math.log(2.0 - math.exp(lp))
    if target >= log_phi(1e-12):
        return 0.0
    return brentq(lambda y: log_phi(y) - target, 1e-12, mean, xtol=1e-12, maxiter=200)


def gaussian_approx_means(N: int, design_ebn0_db: float, code_rate: float = 0.5) -> np.ndarray:
    """Mean LLRs of the synthesized channels for BPSK over AWGN at the design Eb/N0."""
    if not 0.0 < code_rate <= 1.0:
        raise CodeConstructionError(f"Code rate must be in (0, 1], got {code_rate}")
    channel_mean = 4.0 * code_rate * 10.0 ** (design_ebn0_db / 10.0)
    minus = np.vectorize(_check_node_mean, otypes=[np.float64])
    return _polarize(channel_mean, N, minus, lambda m: 2.0 * m)


def read_reliability_file(path: Union[str, Path], N: int) -> np.ndarray:
    """
    Read a ranking file: one index per line, most reliable first, '#' comments.

    Raises:
        CodeConstructionError: If the file is missing or is not a permutation of 0..N-1
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding='utf-8').splitlines()
    except OSError as e:
        raise CodeConstructionError(f"Cannot read reliability file {path}: {e}") from e

    order = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        try:
            order.append(int(line))
        except ValueError:
            raise CodeConstructionError(f"{path}:{line_number}: not an integer index: '{line}'") from None

    if len(order) != N:
        raise CodeConstructionError(f"{path}: expected {N} indices, found {len(order)}")
    if sorted(order) != list(range(N)):
        raise CodeConstructionError(f"{path}: indices are not a permutation of 0..{N - 1}")
    return np.array(order, dtype=np.int64)


def write_reliability_file(path: Union[str, Path], order: Iterable[int], header: str = None) -> None:
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        if header:
            for line in header.splitlines():
                f.write(f"# {line}\n")
        for index in order:
            f.write(f"{int(index)}\n")


def construct_reliability(method: str, N: int, design_param: float = None,
                          code_rate: float = 0.5, path: Union[str, Path] = None) -> ReliabilityProfile:
    """
    Build a reliability profile from one of the supported sources.

    Args:
        method: 'gaussian-approx' | 'bhattacharyya' | 'imported' (or CLI aliases)
        N: Block length (power of two)
        design_param: Design Eb/N0 in dB (GA) or channel Bhattacharyya Z0 (bhattacharyya)
        code_rate: Rate used by GA to convert Eb/N0 to the channel mean LLR
        path: Ranking file for 'imported'

    Returns:
        ReliabilityProfile: Deterministic scores

    Raises:
        CodeConstructionError: Unknown method, bad N, or malformed import file
    """
    method = normalize_method(method)
    if not is_power_of_two(int(N)):
        raise CodeConstructionError(f"N must be a power of two, got {N}")

    if method == 'bhattacharyya':
        z0 = 0.5 if design_param is None else float(design_param)
        scores = -bhattacharyya_parameters(N, z0)
        profile = ReliabilityProfile(scores=scores, method=method, design_param=z0)
    elif method == 'gaussian-approx':
        ebn0 = DEFAULT_DESIGN_EBN0_DB if design_param is None else float(design_param)
        scores = gaussian_approx_means(N, ebn0, code_rate)
        profile = ReliabilityProfile(scores=scores, method=method, design_param=ebn0)
    else:
        if path is None:
            raise CodeConstructionError("Imported construction requires a reliability file path")
        order = read_reliability_file(path, N)
        scores = np.empty(N, dtype=np.float64)
        scores[order] = np.arange(N, 0, -1, dtype=np.float64)
        profile = ReliabilityProfile(scores=scores, method=method, design_param=0.0)

    logger.debug(f"Constructed {method} reliability profile for N={N} (design_param={profile.design_param})")
    return profile


def good_bit_count(K: int, good_fraction: float) -> int:
    """ceil(good_fraction * K), robust to binary rounding of the fraction."""
    return int(math.ceil(round(good_fraction * K, 9)))


def plan_code(profile: ReliabilityProfile, N: int, K: int, good_fraction: float = 0.0) -> PolarCodeSpec:
    """
    Freeze the N-K least reliable indices and mark the most reliable
    ceil(good_fraction * K) information indices as good bits.

    Raises:
        CodeConstructionError: K out of range, fraction outside [0, 1], or N mismatch
    """
    if profile.N != N:
        raise CodeConstructionError(f"Profile length {profile.N} does not match N={N}")
    if not 0 <= K <= N:
        raise CodeConstructionError(f"K must be in [0, {N}], got {K}")
    if not 0.0 <= good_fraction <= 1.0:
        raise CodeConstructionError(f"Good fraction must be in [0, 1], got {good_fraction}")

    order = profile.order()
    frozen_mask = np.ones(N, dtype=bool)
    frozen_mask[order[:K]] = False
    good_mask = np.zeros(N, dtype=bool)
    good_mask[order[:good_bit_count(K, good_fraction)]] = True

    n = N.bit_length() - 1
    return PolarCodeSpec(n=n, N=N, K=K, frozen_mask=frozen_mask,
                         reliability_order=order, good_mask=good_mask)


def build_code(N: int, K: int, good_fraction: float = 0.0, method: str = 'gaussian-approx',
               design_param: float = None, path: Union[str, Path] = None) -> PolarCodeSpec:
    """Construct a profile and plan the code in one step (rate taken as K/N)."""
    rate = K / N if K > 0 else 0.5
    profile = construct_reliability(method, N, design_param, code_rate=rate, path=path)
    return plan_code(profile, N, K, good_fraction)
