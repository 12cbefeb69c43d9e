"""
Bit-by-bit SC-List reference decoder.

Recursive over the butterfly tree, pruning after every leaf. Path rows are
renumbered at each prune; the recursion carries lineage maps back up so the
partial sums of a subtree stay aligned with the surviving rows.
"""

import logging
from typing import Tuple

import numpy as np

from codec.polar_core import PolarCodeSpec, bit_reversal_permutation
from errors import DecoderConfigError
from .kernels import EXACT, METRIC_MODES, candidate_increments, check_node_for, variable_node

logger = logging.getLogger(__name__)

_FROZEN = np.zeros((1, 1), dtype=np.uint8)
_BRANCHES = np.array([[0], [1]], dtype=np.uint8)


class SerialListDecoder:
    """SC-List with L survivors and one prune per u-bit (plain SC when L=1)."""

    def __init__(self, code: PolarCodeSpec, list_size: int, metric_mode: str = EXACT):
        if list_size < 1:
            raise DecoderConfigError(f"List size must be >= 1, got {list_size}")
        if metric_mode not in METRIC_MODES:
            raise DecoderConfigError(f"Metric mode must be one of {METRIC_MODES}, got '{metric_mode}'")
        self.code = code
        self.list_size = list_size
        self.metric_mode = metric_mode
        self._check_node = check_node_for(metric_mode)
        self._histories = None
        self._metrics = None

    def decode(self, llrs) -> Tuple[np.ndarray, np.ndarray]:
        """
        Returns:
            Tuple[np.ndarray, np.ndarray]: u-bit histories (P, N) sorted by metric and their metrics
        """
        code = self.code
        llrs = np.asarray(llrs, dtype=np.float64)
        if llrs.shape != (code.N,):
            raise DecoderConfigError(f"Expected {code.N} LLRs, got shape {llrs.shape}")
        self._histories = np.zeros((1, code.N), dtype=np.uint8)
        self._metrics = np.zeros(1)
        root = llrs[bit_reversal_permutation(code.n)].reshape(1, code.N)
        self._decode_node(root, code.n, 0)
        return self._histories, self._metrics

    def _decode_node(self, alpha: np.ndarray, stage: int, offset: int) -> Tuple[np.ndarray, np.ndarray]:
        """Decode the subtree; returns its codewords per surviving row and the lineage into input rows."""
        if stage == 0:
            return self._decide_leaf(alpha, offset)

        h = 1 << (stage - 1)
        left_beta, left_lineage = self._decode_node(
            self._check_node(alpha[:, :h], alpha[:, h:]), stage - 1, offset
        )
        alpha = alpha[left_lineage] if alpha.shape[0] > 1 else alpha
        right_alpha = variable_node(alpha[:, :h], alpha[:, h:], left_beta)
        right_beta, right_lineage = self._decode_node(right_alpha, stage - 1, offset + h)
        beta = np.concatenate([left_beta[right_lineage] ^ right_beta, right_beta], axis=1)
        return beta, left_lineage[right_lineage]

    def _decide_leaf(self, alpha: np.ndarray, index: int) -> Tuple[np.ndarray, np.ndarray]:
        P = self._metrics.size
        alpha = np.broadcast_to(alpha, (P, 1))
        branches = _FROZEN if self.code.frozen_mask[index] else _BRANCHES
        increments = candidate_increments(alpha, branches, self.metric_mode)
        C = branches.shape[0]
        parents = np.repeat(np.arange(P), C)
        bits = np.tile(branches[:, 0], P)
        totals = self._metrics[parents] + increments.ravel()
        order = np.lexsort((bits, parents, totals))[:self.list_size]

        self._histories = self._histories[parents[order]]
        self._histories[:, index] = bits[order]
        self._metrics = totals[order]
        return bits[order].reshape(-1, 1), parents[order]


def serial_list_decode(llrs, code: PolarCodeSpec, list_size: int, metric_mode: str = EXACT) -> np.ndarray:
    """Best u-bit vector of the serial reference decoder."""
    histories, _ = SerialListDecoder(code, list_size, metric_mode).decode(llrs)
    return histories[0]
