"""
Sorting-cost models over split histograms.
"""

from typing import Dict

from errors import AnalysisError
from .patterns import SplitHistogram

SQUARE = 'square'
LOGLINEAR = 'loglinear'
COST_MODELS = (SQUARE, LOGLINEAR)

# Reference figures for the (2048, 1040) code with 780 and 832 good bits
PUBLISHED_COSTS: Dict[str, int] = {
    'gf075_without_square': 57640,
    'gf075_without_loglinear': 14836,
    'gf075_with_square': 2664,
    'gf075_with_loglinear': 1140,
    'gf080_with_square': 1352,
    'gf080_with_loglinear': 660,
}

# Percentages printed next to the with-decision costs
PUBLISHED_RATIOS: Dict[str, float] = {
    'gf075_square': 4.6,
    'gf075_loglinear': 7.7,
    'gf080_square': 2.4,
    'gf080_loglinear': 4.5,
}


def _unit_cost(split: int, model: str) -> int:
    if model == SQUARE:
        return split * split
    if model == LOGLINEAR:
        # split is a power of two, so log2 is exact
        return split * (split.bit_length() - 1)
    raise AnalysisError(f"Unknown cost model '{model}', expected one of {COST_MODELS}")


def sorting_cost(hist: SplitHistogram, list_size: int = 1, model: str = SQUARE) -> int:
    """
    Σ count(s)·s² (square) or Σ count(s)·s·log2(s) (loglinear), times list_size.

    Args:
        hist: Split histogram
        list_size: Optional multiplier L (1 reproduces the published arithmetic)
        model: 'square' or 'loglinear'

    Raises:
        AnalysisError: Unknown model or list size below 1
    """
    if model not in COST_MODELS:
        raise AnalysisError(f"Unknown cost model '{model}', expected one of {COST_MODELS}")
    if list_size < 1:
        raise AnalysisError(f"List size must be >= 1, got {list_size}")
    return list_size * sum(count * _unit_cost(split, model) for split, count in hist.counts.items())


def cost_ratio(with_cost: int, without_cost: int) -> float:
    """with / without as a percentage."""
    if without_cost <= 0:
        raise AnalysisError("Without-decision cost must be positive")
    return 100.0 * with_cost / without_cost
