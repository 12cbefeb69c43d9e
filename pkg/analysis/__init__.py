"""
Analysis package: group pattern enumeration, split histograms and sorting costs.
"""

from .patterns import (
    WITH_DECISION, WITHOUT_DECISION, DECISION_MODES, GroupPatternStats, SplitHistogram,
    enumerate_group_patterns, runtime_split_stats, split_histogram, structural_sums,
)
from .costs import COST_MODELS, LOGLINEAR, PUBLISHED_COSTS, PUBLISHED_RATIOS, SQUARE, cost_ratio, sorting_cost
from .fixtures import read_pattern_table, write_pattern_table
from .report import PRINTED_SPLIT_HISTOGRAMS, AnalysisReport, build_report, format_report, histogram_discrepancy

__all__ = [
    'WITH_DECISION', 'WITHOUT_DECISION', 'DECISION_MODES', 'GroupPatternStats', 'SplitHistogram',
    'enumerate_group_patterns', 'runtime_split_stats', 'split_histogram', 'structural_sums',
    'COST_MODELS', 'LOGLINEAR', 'PUBLISHED_COSTS', 'PUBLISHED_RATIOS', 'SQUARE', 'cost_ratio', 'sorting_cost',
    'read_pattern_table', 'write_pattern_table',
    'PRINTED_SPLIT_HISTOGRAMS', 'AnalysisReport', 'build_report', 'format_report', 'histogram_discrepancy',
]
