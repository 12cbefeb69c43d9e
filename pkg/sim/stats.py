"""
Per-point statistics and the Wilson score interval.
"""

import math
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Tuple

from scipy.stats import norm

from errors import SimConfigError

logger = logging.getLogger(__name__)


def confidence_interval(errors: int, frames: int, level: float = 0.95) -> Tuple[float, float]:
    """
    Wilson score interval for an error proportion.

    Args:
        errors: Number of error events
        frames: Number of trials (>= 1)
        level: Two-sided confidence level

    Returns:
        Tuple[float, float]: (low, high), clipped to [0, 1]
    """
    if frames < 1:
        raise SimConfigError(f"Confidence interval needs at least one frame, got {frames}")
    if not 0 <= errors <= frames:
        raise SimConfigError(f"Error count {errors} outside [0, {frames}]")
    z = float(norm.ppf(0.5 + level / 2.0))
    p = errors / frames
    z2n = z * z / frames
    center = (p + z2n / 2.0) / (1.0 + z2n)
    half = z * math.sqrt(p * (1.0 - p) / frames + z2n / (4.0 * frames)) / (1.0 + z2n)
    low = 0.0 if errors == 0 else max(0.0, center - half)
    high = 1.0 if errors == frames else min(1.0, center + half)
    return low, high


@dataclass
class PointResult:
    """Totals at one Eb/N0."""
    ebn0_db: float
    frames: int = 0
    frame_errors: int = 0
    bit_errors: int = 0
    payload_bits: int = 0
    list_size_sum: int = 0
    candidates_sorted: int = 0
    group_steps: int = 0
    cached: bool = False

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames if self.frames else 0.0

    @property
    def ber(self) -> float:
        total = self.frames * self.payload_bits
        return self.bit_errors / total if total else 0.0

    @property
    def fer_interval(self) -> Tuple[float, float]:
        return confidence_interval(self.frame_errors, self.frames)

    @property
    def mean_list(self) -> float:
        return self.list_size_sum / self.frames if self.frames else 0.0

    @property
    def mean_candidates(self) -> float:
        return self.candidates_sorted / self.group_steps if self.group_steps else 0.0

    def to_record(self) -> Dict[str, Any]:
        record = asdict(self)
        record.pop('cached')
        return record

    @classmethod
    def from_record(cls, record: Dict[str, Any], cached: bool = False) -> 'PointResult':
        known = {k: v for k, v in record.items() if k in cls.__dataclass_fields__ and k != 'cached'}
        return cls(cached=cached, **known)

    def summary(self) -> Dict[str, Any]:
        low, high = self.fer_interval
        return {
            'ebn0_db': self.ebn0_db, 'frames': self.frames, 'frame_errors': self.frame_errors,
            'fer': self.fer, 'fer_lo': low, 'fer_hi': high, 'ber': self.ber,
            'mean_list': self.mean_list, 'mean_candidates': self.mean_candidates,
        }


@dataclass
class SimResult:
    points: List[PointResult] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)


def check_fer_monotonic(points: List[PointResult]) -> List[str]:
    """
    Soft check that FER does not rise with Eb/N0 beyond statistical noise.

    Returns:
        List[str]: One message per adjacent pair whose FER rises with disjoint intervals
    """
    ordered = sorted((p for p in points if p.frames), key=lambda p: p.ebn0_db)
    messages = []
    for lower, higher in zip(ordered, ordered[1:]):
        if higher.fer > lower.fer:
            _, lower_hi = lower.fer_interval
            higher_lo, _ = higher.fer_interval
            if higher_lo > lower_hi:
                messages.append(
                    f"FER rises from {lower.fer:.3e} at {lower.ebn0_db} dB to {higher.fer:.3e} "
                    f"at {higher.ebn0_db} dB with disjoint 95% intervals"
                )
    return messages
