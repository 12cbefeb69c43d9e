"""
Soft-value kernels shared by every SC-based decoder.

LLR convention: positive favors bit 0. A hard decision on an LLR of exactly
zero is bit 0.
"""

import numpy as np

from codec.polar_core import kronecker_butterfly

EXACT = 'exact'
MIN_APPROX = 'min-approx'
METRIC_MODES = (EXACT, MIN_APPROX)


def check_node_exact(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact boxplus: 2 atanh(tanh(a/2) tanh(b/2)) in a numerically stable form."""
    return (np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))
            + np.log1p(np.exp(-np.abs(a + b)))
            - np.log1p(np.exp(-np.abs(a - b))))


def check_node_min(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Min-sum approximation of boxplus."""
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def variable_node(a: np.ndarray, b: np.ndarray, left_bits: np.ndarray) -> np.ndarray:
    """g(a, b, c) = b + (1 - 2c) a."""
    return b + (1.0 - 2.0 * left_bits) * a


def check_node_for(mode: str):
    return check_node_exact if mode == EXACT else check_node_min


def hard_decision(alpha: np.ndarray) -> np.ndarray:
    return (alpha < 0).astype(np.uint8)


def node_codewords(patterns: np.ndarray) -> np.ndarray:
    """beta = size-m transform v · F^{⊗log m} of each u-pattern (rows)."""
    return kronecker_butterfly(patterns)


def candidate_increments(alpha: np.ndarray, codewords: np.ndarray, mode: str = EXACT) -> np.ndarray:
    """
    Metric increments of every (path, candidate) pair at one size-m node.

    Args:
        alpha: Node soft values, shape (P, m)
        codewords: Node codewords beta of the candidates, shape (..., m)
        mode: 'exact' uses ln(1 + e^{-(1-2b) alpha}); 'min-approx' charges |alpha|
              on sign mismatch

    Returns:
        np.ndarray: Increments of shape (P, ...)
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    extra = codewords.ndim - 1
    a = alpha.reshape(alpha.shape[:1] + (1,) * extra + alpha.shape[1:])
    if mode == EXACT:
        signs = 1.0 - 2.0 * codewords
        return np.logaddexp(0.0, -signs * a).sum(axis=-1)
    hard = hard_decision(a)
    return np.where(hard != codewords, np.abs(a), 0.0).sum(axis=-1)
