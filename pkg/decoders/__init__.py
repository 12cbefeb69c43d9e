"""
Decoders package: SC, serial and parallel SC-List, decision-aided extension,
CRC-aided selection and the adaptive driver.
"""

from .config import DecoderConfig, schedule_list_sizes
from .kernels import EXACT, MIN_APPROX, METRIC_MODES
from .paths import DecoderPath, GroupCandidate, CandidateSet, PathList
from .list_decoder import (
    DecodeResult, DecodeStats, decode, extend_full, extend_decision_aided,
    group_candidate_metrics, initial_path, prune_top_L,
)
from .serial import SerialListDecoder, serial_list_decode
from .selection import AdaptiveOutcome, SelectedPath, adaptive_decode, select_output_path
from .ml import exhaustive_ml_decode

__all__ = [
    'DecoderConfig', 'schedule_list_sizes', 'EXACT', 'MIN_APPROX', 'METRIC_MODES',
    'DecoderPath', 'GroupCandidate', 'CandidateSet', 'PathList',
    'DecodeResult', 'DecodeStats', 'decode', 'extend_full', 'extend_decision_aided',
    'group_candidate_metrics', 'initial_path', 'prune_top_L',
    'SerialListDecoder', 'serial_list_decode',
    'AdaptiveOutcome', 'SelectedPath', 'adaptive_decode', 'select_output_path',
    'exhaustive_ml_decode',
]
