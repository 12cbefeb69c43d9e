"""
Path and candidate containers.

The decoder works on PathList / CandidateSet (struct-of-arrays); DecoderPath
and GroupCandidate are per-item views of the same data.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from errors import DecoderConfigError
from .sc_state import SCState


@dataclass(frozen=True)
class GroupCandidate:
    parent: int
    pattern: Tuple[int, ...]
    metric_increment: float


@dataclass
class DecoderPath:
    """One survival path: decided u-bits, log-domain penalty and SC state."""
    history: np.ndarray
    metric: float
    sc_state: Optional[SCState] = None


def pattern_value(pattern) -> int:
    """Integer value of an m-bit pattern, first bit most significant."""
    value = 0
    for bit in pattern:
        value = (value << 1) | int(bit)
    return value


@dataclass
class CandidateSet:
    """All candidates of one group extension step."""
    group_index: int
    parents: np.ndarray
    patterns: np.ndarray
    pattern_values: np.ndarray
    codewords: np.ndarray
    increments: np.ndarray

    def __len__(self) -> int:
        return int(self.parents.size)

    def totals(self, parent_metrics: np.ndarray) -> np.ndarray:
        return parent_metrics[self.parents] + self.increments

    def to_list(self) -> List[GroupCandidate]:
        return [
            GroupCandidate(parent=int(p), pattern=tuple(int(b) for b in pattern), metric_increment=float(d))
            for p, pattern, d in zip(self.parents, self.patterns, self.increments)
        ]


class PathList:
    """L_current survival paths sharing one stacked SC state."""

    __slots__ = ('histories', 'metrics', 'state', 'decided')

    def __init__(self, histories: np.ndarray, metrics: np.ndarray, state: SCState, decided: int):
        self.histories = histories
        self.metrics = metrics
        self.state = state
        self.decided = decided

    @classmethod
    def initial(cls, natural_llrs: np.ndarray, n: int) -> 'PathList':
        N = 1 << n
        return cls(np.zeros((1, N), dtype=np.uint8), np.zeros(1), SCState.from_channel(natural_llrs, n), 0)

    @classmethod
    def from_paths(cls, paths: List[DecoderPath], N: int) -> 'PathList':
        """Stack single paths that share the same decoding position."""
        decided = {int(np.asarray(p.history).size) for p in paths}
        if len(decided) != 1:
            raise DecoderConfigError("Paths must have decided the same number of bits")
        if any(p.sc_state is None for p in paths):
            raise DecoderConfigError("Paths need their SC state to be extended")
        decided = decided.pop()
        histories = np.zeros((len(paths), N), dtype=np.uint8)
        for i, p in enumerate(paths):
            histories[i, :decided] = p.history
        states = [p.sc_state for p in paths]
        n = states[0].n
        alpha = [np.concatenate([st.alpha[s] for st in states]) for s in range(n)] + [states[0].alpha[n]]
        beta = [np.concatenate([st.beta[s] for st in states]) for s in range(n)]
        state = SCState(n, len(paths), alpha, beta)
        metrics = np.array([p.metric for p in paths], dtype=np.float64)
        return cls(histories, metrics, state, decided)

    def __len__(self) -> int:
        return int(self.metrics.size)

    def path(self, index: int, with_state: bool = True) -> DecoderPath:
        return DecoderPath(
            history=self.histories[index, :self.decided].copy(),
            metric=float(self.metrics[index]),
            sc_state=self.state.row(index) if with_state else None,
        )

    def to_paths(self, with_state: bool = False) -> List[DecoderPath]:
        return [self.path(i, with_state) for i in range(len(self))]
