"""
CRC-aided output selection and the adaptive list-size driver.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

import numpy as np

from codec.crc import CrcSpec, crc_check_batch
from codec.polar_core import PolarCodeSpec
from errors import DecoderConfigError
from .config import DecoderConfig, schedule_list_sizes
from .list_decoder import DecodeResult, DecodeStats, decode
from .paths import DecoderPath, PathList

logger = logging.getLogger(__name__)


@dataclass
class SelectedPath:
    """Chosen path: payload (CRC stripped), CRC verdict, its rank in the list and metric."""
    payload: np.ndarray
    crc_passed: bool
    index: int
    metric: float
    u_bits: np.ndarray


@dataclass
class AdaptiveOutcome:
    payload: np.ndarray
    crc_passed: bool
    trace: List[int]
    selected: SelectedPath
    attempts: List[DecodeStats] = field(default_factory=list)

    @property
    def final_list_size(self) -> int:
        return self.trace[-1]

    @property
    def candidates_sorted(self) -> int:
        return sum(s.total_candidates for s in self.attempts)

    @property
    def group_steps(self) -> int:
        return sum(s.groups for s in self.attempts)


def _histories_and_metrics(final_list) -> tuple:
    if isinstance(final_list, DecodeResult):
        final_list = final_list.paths
    if isinstance(final_list, PathList):
        return final_list.histories, final_list.metrics
    paths: Sequence[DecoderPath] = final_list
    if len(paths) == 0:
        raise DecoderConfigError("Cannot select from an empty path list")
    return (np.stack([np.asarray(p.history, dtype=np.uint8) for p in paths]),
            np.array([p.metric for p in paths], dtype=np.float64))


def select_output_path(final_list: Union[DecodeResult, PathList, Sequence[DecoderPath]],
                       crc_spec: Optional[CrcSpec], code: PolarCodeSpec) -> SelectedPath:
    """
    Lowest-metric path whose information bits pass the CRC.

    If no path passes, the lowest-metric path is returned with crc_passed=False.
    Without a CRC the lowest-metric path is returned as passed.

    Args:
        final_list: Final paths (any order) with full u-bit histories
        crc_spec: CRC protecting the information bits, or None
        code: Code the paths belong to

    Returns:
        SelectedPath: Payload has the CRC bits removed
    """
    histories, metrics = _histories_and_metrics(final_list)
    if histories.shape[0] == 0:
        raise DecoderConfigError("Cannot select from an empty path list")
    if histories.shape[1] != code.N:
        raise DecoderConfigError(f"Path histories have {histories.shape[1]} bits, expected N={code.N}")

    ranking = np.argsort(metrics, kind='stable')
    info = histories[:, code.info_indices]
    if crc_spec is None:
        best = int(ranking[0])
        return SelectedPath(info[best].copy(), True, best, float(metrics[best]), histories[best].copy())

    passed = crc_check_batch(info, crc_spec)
    passing = ranking[passed[ranking]]
    best = int(passing[0]) if passing.size else int(ranking[0])
    payload_length = code.K - crc_spec.width
    return SelectedPath(
        payload=info[best, :payload_length].copy(),
        crc_passed=bool(passing.size),
        index=best,
        metric=float(metrics[best]),
        u_bits=histories[best].copy(),
    )


def adaptive_decode(llrs, code: PolarCodeSpec, config: DecoderConfig, crc_spec: CrcSpec) -> AdaptiveOutcome:
    """
    Retry with L = 1, 2, 4, ..., L_max until the selected path passes the CRC.

    Returns:
        AdaptiveOutcome: Payload of the first passing attempt (or of the last
        attempt, flagged failed) and the list sizes tried

    Raises:
        DecoderConfigError: If no CRC is given or the configuration is invalid
    """
    if crc_spec is None:
        raise DecoderConfigError("Adaptive decoding needs a CRC")
    if code.K <= crc_spec.width:
        raise DecoderConfigError(f"K={code.K} leaves no payload next to a {crc_spec.width}-bit CRC")
    trace = []
    attempts = []
    selected = None
    for list_size in schedule_list_sizes(config.max_list_size):
        result = decode(llrs, code, config.with_list_size(list_size))
        selected = select_output_path(result, crc_spec, code)
        trace.append(list_size)
        attempts.append(result.stats)
        if selected.crc_passed:
            break
    logger.debug(f"Adaptive decode finished after list sizes {trace} (crc passed: {selected.crc_passed})")
    return AdaptiveOutcome(selected.payload, selected.crc_passed, trace, selected, attempts)
