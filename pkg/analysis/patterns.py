"""
Static enumeration of group patterns and split-count histograms.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List

import numpy as np

from codec.polar_core import PolarCodeSpec, is_power_of_two
from errors import AnalysisError

logger = logging.getLogger(__name__)

WITH_DECISION = 'with'
WITHOUT_DECISION = 'without'
DECISION_MODES = (WITH_DECISION, WITHOUT_DECISION)


@dataclass(frozen=True)
class GroupPatternStats:
    """
    One (bit pattern, good pattern) pair: '1' marks an information bit in
    bit_pattern and a good bit in good_pattern.
    """
    bit_pattern: str
    good_pattern: str
    N1: int

    def __post_init__(self):
        if len(self.bit_pattern) != len(self.good_pattern):
            raise AnalysisError(f"Patterns '{self.bit_pattern}' and '{self.good_pattern}' differ in width")
        if set(self.bit_pattern + self.good_pattern) - {'0', '1'}:
            raise AnalysisError(f"Patterns must be 0/1 strings, got '{self.bit_pattern}', '{self.good_pattern}'")
        if any(g == '1' and b == '0' for b, g in zip(self.bit_pattern, self.good_pattern)):
            raise AnalysisError(f"Good pattern {self.good_pattern} marks frozen bits of {self.bit_pattern}")
        if self.N1 < 0:
            raise AnalysisError(f"Occurrence count must be non-negative, got {self.N1}")

    @property
    def info_count(self) -> int:
        return self.bit_pattern.count('1')

    @property
    def good_count(self) -> int:
        return self.good_pattern.count('1')

    @property
    def M1(self) -> int:
        return 1 << self.info_count

    @property
    def M2(self) -> int:
        return 1 << (self.info_count - self.good_count)

    def splits(self, mode: str) -> int:
        return self.M2 if mode == WITH_DECISION else self.M1


def _bits_to_string(bits: Iterable) -> str:
    return ''.join('1' if b else '0' for b in bits)


def enumerate_group_patterns(code: PolarCodeSpec, m: int) -> List[GroupPatternStats]:
    """
    Count every (bit pattern, good pattern) pair over the N/m groups of a code.

    Args:
        code: Code definition
        m: Group width, a power of two dividing N

    Returns:
        List[GroupPatternStats]: One entry per distinct pair, sorted by (bit_pattern, good_pattern)
    """
    if not is_power_of_two(m) or code.N % m != 0:
        raise AnalysisError(f"Group width m={m} must be a power of two dividing N={code.N}")
    groups = code.N // m
    info = (~code.frozen_mask).reshape(groups, m)
    good = code.good_mask.reshape(groups, m)
    counts = Counter(
        (_bits_to_string(info[k]), _bits_to_string(good[k])) for k in range(groups)
    )
    return [GroupPatternStats(bit, good_pattern, n1) for (bit, good_pattern), n1 in sorted(counts.items())]


def structural_sums(stats: Iterable[GroupPatternStats]) -> Dict[str, int]:
    """Σ N1, Σ N1·#info and Σ N1·#good; these equal N/m, K and the good-set size."""
    stats = list(stats)
    return {
        'groups': sum(s.N1 for s in stats),
        'info_bits': sum(s.N1 * s.info_count for s in stats),
        'good_bits': sum(s.N1 * s.good_count for s in stats),
    }


class SplitHistogram:
    """Group occurrences per split count s (powers of two >= 2; s=1 is never stored)."""

    def __init__(self, counts: Dict[int, int] = None):
        self.counts: Dict[int, int] = {}
        for split, count in (counts or {}).items():
            split, count = int(split), int(count)
            if split < 2 or not is_power_of_two(split):
                raise AnalysisError(f"Split counts must be powers of two >= 2, got {split}")
            if count < 0:
                raise AnalysisError(f"Appearance counts must be non-negative, got {count} for s={split}")
            self.counts[split] = count

    def get(self, split: int) -> int:
        return self.counts.get(split, 0)

    def splits(self) -> List[int]:
        return sorted(self.counts)

    def total_paths(self) -> int:
        """Σ count(s)·s."""
        return sum(s * c for s, c in self.counts.items())

    def to_dict(self, max_split: int = None) -> Dict[int, int]:
        """Sorted mapping; with max_split, every power of two up to it is listed (zeros included)."""
        if max_split is None:
            return {s: self.counts[s] for s in self.splits()}
        keys = set(self.counts)
        s = 2
        while s <= max_split:
            keys.add(s)
            s *= 2
        return {s: self.get(s) for s in sorted(keys)}

    def __eq__(self, other) -> bool:
        if isinstance(other, SplitHistogram):
            other = other.counts
        if not isinstance(other, dict):
            return NotImplemented
        keys = set(self.counts) | set(other)
        return all(self.get(k) == int(other.get(k, 0)) for k in keys)

    def __repr__(self) -> str:
        return f"SplitHistogram({self.to_dict()})"


def split_histogram(stats: Iterable[GroupPatternStats], mode: str) -> SplitHistogram:
    """Bucket N1 by M1 (without decision) or M2 (with decision), dropping s=1."""
    if mode not in DECISION_MODES:
        raise AnalysisError(f"Decision mode must be one of {DECISION_MODES}, got '{mode}'")
    counts = Counter()
    for s in stats:
        split = s.splits(mode)
        if split > 1:
            counts[split] += s.N1
    return SplitHistogram(dict(counts))


def runtime_split_stats(decode_stats: Iterable) -> SplitHistogram:
    """
    Histogram of observed splits per survivor (candidates / current list size)
    accumulated over a stream of DecodeStats.
    """
    counts = Counter()
    for stats in decode_stats:
        splits = np.asarray(stats.candidate_counts) // np.asarray(stats.list_sizes)
        for split in splits[splits > 1]:
            counts[int(split)] += 1
    return SplitHistogram(dict(counts))
