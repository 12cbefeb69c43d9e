"""
Stacked successive-cancellation state for a list of paths.

Stage s holds the soft values of the node of size 2^s currently being decoded
(alpha[s], shape (P, 2^s)) and the codeword of the last completed left child
at that stage (beta[s]). alpha[n] is the channel row shared by all paths.
"""

from typing import List

import numpy as np

from .kernels import variable_node


def trailing_zeros(value: int) -> int:
    return (value & -value).bit_length() - 1


class SCState:
    """Soft values and partial sums for P paths; rows are path ids."""

    __slots__ = ('n', 'size', 'alpha', 'beta')

    def __init__(self, n: int, size: int, alpha: List[np.ndarray], beta: List[np.ndarray]):
        self.n = n
        self.size = size
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def from_channel(cls, natural_llrs: np.ndarray, n: int) -> 'SCState':
        """Single-path state from LLRs already mapped to natural butterfly order."""
        N = 1 << n
        root = np.asarray(natural_llrs, dtype=np.float64).reshape(1, N)
        alpha = [np.zeros((1, 1 << s)) for s in range(n)] + [root]
        beta = [np.zeros((1, 1 << s), dtype=np.uint8) for s in range(n)]
        return cls(n, 1, alpha, beta)

    def descend(self, group_index: int, stage: int, check_node) -> np.ndarray:
        """
        Compute the soft values of node (stage, group_index).

        Requires that every group before group_index has been committed.

        Returns:
            np.ndarray: Node soft values, shape (P, 2^stage)
        """
        n = self.n
        if stage == n:
            return np.broadcast_to(self.alpha[n], (self.size, 1 << n))

        if group_index == 0:
            start = n
        else:
            # Lowest common ancestor with the previous group; we are in its right subtree
            top = stage + trailing_zeros(group_index) + 1
            parent = self.alpha[top]
            h = 1 << (top - 1)
            self.alpha[top - 1][...] = variable_node(parent[:, :h], parent[:, h:], self.beta[top - 1])
            start = top - 1

        for s in range(start, stage, -1):
            parent = self.alpha[s]
            h = 1 << (s - 1)
            self.alpha[s - 1][...] = check_node(parent[:, :h], parent[:, h:])
        return self.alpha[stage]

    def commit(self, group_index: int, stage: int, codewords: np.ndarray) -> None:
        """Fold the decided node codewords (P, 2^stage) into the partial sums."""
        c = np.asarray(codewords, dtype=np.uint8)
        s, index = stage, group_index
        while index & 1:
            c = np.concatenate([self.beta[s] ^ c, c], axis=1)
            s += 1
            index >>= 1
        if s < self.n:
            self.beta[s][...] = c

    def select(self, parents: np.ndarray, min_stage: int = 0) -> 'SCState':
        """
        New state whose row i copies row parents[i]; stages below min_stage are
        scratch and are not copied.
        """
        parents = np.asarray(parents, dtype=np.int64)
        size = parents.size
        alpha = []
        beta = []
        for s in range(self.n):
            if s >= min_stage:
                alpha.append(self.alpha[s][parents])
                beta.append(self.beta[s][parents])
            else:
                alpha.append(np.empty((size, 1 << s)))
                beta.append(np.zeros((size, 1 << s), dtype=np.uint8))
        alpha.append(self.alpha[self.n])
        return SCState(self.n, size, alpha, beta)

    def row(self, index: int) -> 'SCState':
        return self.select(np.array([index]))
