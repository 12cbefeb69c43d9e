"""
Parallel SC-List decoding with optional decision-aided extension.

Each step handles a group of m consecutive u-bits: every survivor descends to
the size-m node covering the group, candidates are scored with node-level
log penalties, and the list is pruned once per group to the L best totals.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from codec.polar_core import PolarCodeSpec, bit_reversal_permutation
from errors import DecoderConfigError
from .config import DecoderConfig
from .kernels import candidate_increments, check_node_for, node_codewords
from .paths import CandidateSet, DecoderPath, GroupCandidate, PathList
from .sc_state import SCState

logger = logging.getLogger(__name__)


def _assignments(count: int) -> np.ndarray:
    """All 2^count bit assignments, row r is r in binary (first column MSB)."""
    rows = np.arange(1 << count)[:, None]
    return ((rows >> np.arange(count - 1, -1, -1)) & 1).astype(np.uint8)


@dataclass(frozen=True)
class GroupTables:
    """Candidate patterns of one group shape, with and without decision."""
    info_positions: Tuple[int, ...]
    good_positions: Tuple[int, ...]
    full_patterns: np.ndarray
    full_values: np.ndarray
    full_codewords: np.ndarray
    split_patterns: np.ndarray
    split_values: np.ndarray
    split_codewords: np.ndarray

    @property
    def bad_positions(self) -> Tuple[int, ...]:
        return tuple(p for p in self.info_positions if p not in self.good_positions)

    @property
    def has_good(self) -> bool:
        return bool(self.good_positions)


@lru_cache(maxsize=512)
def group_tables(info_key: Tuple[bool, ...], good_key: Tuple[bool, ...]) -> GroupTables:
    m = len(info_key)
    weights = 1 << np.arange(m - 1, -1, -1)
    info = tuple(j for j in range(m) if info_key[j])
    good = tuple(j for j in range(m) if good_key[j])
    bad = tuple(j for j in info if j not in good)

    full = np.zeros((1 << len(info), m), dtype=np.uint8)
    full[:, list(info)] = _assignments(len(info))

    split = np.zeros((1 << len(bad), 1 << len(good), m), dtype=np.uint8)
    split[:, :, list(bad)] = _assignments(len(bad))[:, None, :]
    split[:, :, list(good)] = _assignments(len(good))[None, :, :]

    return GroupTables(
        info_positions=info,
        good_positions=good,
        full_patterns=full,
        full_values=full.astype(np.int64) @ weights,
        full_codewords=node_codewords(full),
        split_patterns=split,
        split_values=split.astype(np.int64) @ weights,
        split_codewords=node_codewords(split),
    )


class GroupLayout:
    """Per-group candidate tables of a code for group width m."""

    def __init__(self, code: PolarCodeSpec, m: int):
        if code.N % m != 0:
            raise DecoderConfigError(f"Group width m={m} does not divide N={code.N}")
        self.m = m
        self.stage = m.bit_length() - 1
        self.groups = code.N // m
        info = (~code.frozen_mask).reshape(self.groups, m)
        good = code.good_mask.reshape(self.groups, m)
        self.tables = [group_tables(tuple(bool(b) for b in info[k]), tuple(bool(b) for b in good[k]))
                       for k in range(self.groups)]

    def __getitem__(self, group_index: int) -> GroupTables:
        if not 0 <= group_index < self.groups:
            raise DecoderConfigError(f"Group index {group_index} out of range [0, {self.groups})")
        return self.tables[group_index]


@lru_cache(maxsize=16)
def group_layout(code: PolarCodeSpec, m: int) -> GroupLayout:
    return GroupLayout(code, m)


@dataclass
class DecodeStats:
    """Per-group list size before extension and number of candidates sorted."""
    group_width: int
    list_sizes: np.ndarray
    candidate_counts: np.ndarray
    decision_applied: np.ndarray

    @property
    def splits_per_path(self) -> np.ndarray:
        return self.candidate_counts // self.list_sizes

    @property
    def total_candidates(self) -> int:
        return int(self.candidate_counts.sum())

    @property
    def groups(self) -> int:
        return int(self.candidate_counts.size)

    @property
    def mean_candidates(self) -> float:
        return self.total_candidates / self.groups if self.groups else 0.0


@dataclass
class DecodeResult:
    code: PolarCodeSpec
    list_size: int
    paths: PathList
    stats: DecodeStats

    @property
    def best_path_bits(self) -> np.ndarray:
        return self.paths.histories[0].copy()

    @property
    def final_list(self) -> List[DecoderPath]:
        """Final paths sorted by metric (lowest first)."""
        return self.paths.to_paths()

    def information_bits(self) -> np.ndarray:
        """Information bits of every final path, shape (P, K)."""
        return self.paths.histories[:, self.code.info_indices]


def initial_path(llrs, code: PolarCodeSpec) -> DecoderPath:
    """Empty path with fresh SC state for channel LLRs in codeword order."""
    llrs = _check_llrs(llrs, code)
    natural = llrs[bit_reversal_permutation(code.n)]
    return DecoderPath(history=np.zeros(0, dtype=np.uint8), metric=0.0,
                       sc_state=SCState.from_channel(natural, code.n))


def _check_llrs(llrs, code: PolarCodeSpec) -> np.ndarray:
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.shape != (code.N,):
        raise DecoderConfigError(f"Expected {code.N} LLRs, got shape {llrs.shape}")
    return llrs


def extend_full(paths: PathList, group_index: int, code: PolarCodeSpec, config: DecoderConfig,
                layout: GroupLayout = None) -> CandidateSet:
    """Every survivor times every admissible pattern of the group (2^#info each)."""
    layout = layout or group_layout(code, config.m)
    tables = layout[group_index]
    alpha = paths.state.descend(group_index, layout.stage, check_node_for(config.metric_mode))
    increments = candidate_increments(alpha, tables.full_codewords, config.metric_mode)
    P, C = increments.shape
    return CandidateSet(
        group_index=group_index,
        parents=np.repeat(np.arange(P), C),
        patterns=np.tile(tables.full_patterns, (P, 1)),
        pattern_values=np.tile(tables.full_values, P),
        codewords=np.tile(tables.full_codewords, (P, 1)),
        increments=increments.ravel(),
    )


def extend_decision_aided(paths: PathList, group_index: int, code: PolarCodeSpec, config: DecoderConfig,
                          layout: GroupLayout = None) -> CandidateSet:
    """
    One candidate per survivor and bad-bit pattern: the good-bit completion with
    the smallest increment (lowest pattern value on ties).
    """
    layout = layout or group_layout(code, config.m)
    tables = layout[group_index]
    alpha = paths.state.descend(group_index, layout.stage, check_node_for(config.metric_mode))
    increments = candidate_increments(alpha, tables.split_codewords, config.metric_mode)
    P, B, _ = increments.shape
    best = np.argmin(increments, axis=2)
    chosen = np.take_along_axis(increments, best[..., None], axis=2)[..., 0]
    bad_index = np.tile(np.arange(B), P)
    good_index = best.ravel()
    return CandidateSet(
        group_index=group_index,
        parents=np.repeat(np.arange(P), B),
        patterns=tables.split_patterns[bad_index, good_index],
        pattern_values=tables.split_values[bad_index, good_index],
        codewords=tables.split_codewords[bad_index, good_index],
        increments=chosen.ravel(),
    )


def prune_top_L(paths: PathList, candidates: CandidateSet, list_size: int) -> PathList:
    """
    Keep the list_size candidates of smallest total metric; ties go to the lower
    parent id, then the lower pattern value. Survivors are numbered in that order.
    """
    totals = candidates.totals(paths.metrics)
    order = np.lexsort((candidates.pattern_values, candidates.parents, totals))[:list_size]
    parents = candidates.parents[order]
    m = candidates.patterns.shape[1]
    stage = m.bit_length() - 1
    k = candidates.group_index

    state = paths.state.select(parents, min_stage=stage)
    state.commit(k, stage, candidates.codewords[order])
    histories = paths.histories[parents]
    histories[:, k * m:(k + 1) * m] = candidates.patterns[order]
    return PathList(histories, totals[order], state, (k + 1) * m)


def group_candidate_metrics(path: DecoderPath, group_index: int, code: PolarCodeSpec,
                            config: DecoderConfig) -> List[GroupCandidate]:
    """
    All candidates of one path for one group, with metric increments.

    Raises:
        DecoderConfigError: Group index out of range or path not positioned at the group
    """
    config.validate(code.N)
    layout = group_layout(code, config.m)
    layout[group_index]
    if np.asarray(path.history).size != group_index * config.m:
        raise DecoderConfigError(
            f"Path has decided {np.asarray(path.history).size} bits; group {group_index} starts at bit "
            f"{group_index * config.m}"
        )
    paths = PathList.from_paths([path], code.N)
    return extend_full(paths, group_index, code, config, layout).to_list()


def decode(llrs, code: PolarCodeSpec, config: DecoderConfig) -> DecodeResult:
    """
    Decode one block with the parallel (optionally decision-aided) SC-List decoder.

    Args:
        llrs: Channel LLRs in codeword order, length N
        code: Code definition
        config: Decoder configuration (list_size is used as L)

    Returns:
        DecodeResult: Final paths sorted by metric plus per-group statistics

    Raises:
        DecoderConfigError: If the configuration or LLR length is invalid
    """
    config.validate(code.N)
    llrs = _check_llrs(llrs, code)
    layout = group_layout(code, config.m)
    paths = PathList.initial(llrs[bit_reversal_permutation(code.n)], code.n)

    list_sizes = np.empty(layout.groups, dtype=np.int64)
    counts = np.empty(layout.groups, dtype=np.int64)
    decided = np.zeros(layout.groups, dtype=bool)
    for k in range(layout.groups):
        if config.decision_enabled and layout.tables[k].has_good:
            candidates = extend_decision_aided(paths, k, code, config, layout)
            decided[k] = True
        else:
            candidates = extend_full(paths, k, code, config, layout)
        list_sizes[k] = len(paths)
        counts[k] = len(candidates)
        paths = prune_top_L(paths, candidates, config.list_size)

    logger.debug(f"Decoded N={code.N} with L={config.list_size}, m={config.m}: "
                 f"{int(counts.sum())} candidates sorted, best metric {paths.metrics[0]:.4f}")
    stats = DecodeStats(group_width=config.m, list_sizes=list_sizes, candidate_counts=counts,
                        decision_applied=decided)
    return DecodeResult(code=code, list_size=config.list_size, paths=paths, stats=stats)
