"""
Pattern, histogram and cost report for a code or a pattern table.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .costs import COST_MODELS, LOGLINEAR, PUBLISHED_COSTS, SQUARE, cost_ratio, sorting_cost
from .patterns import (
    WITH_DECISION, WITHOUT_DECISION, GroupPatternStats, SplitHistogram, split_histogram, structural_sums,
)

logger = logging.getLogger(__name__)

# Split-count columns as printed for the 780-good-bit code
PRINTED_SPLIT_HISTOGRAMS = {
    WITHOUT_DECISION: {2: 38, 4: 9, 8: 44, 16: 213},
    WITH_DECISION: {2: 94, 4: 28, 8: 24, 16: 0},
}
PRINTED_HISTOGRAM_GOOD_BITS = 780


@dataclass
class HistogramDiscrepancy:
    """Printed vs recomputed with-decision histogram and what each one costs."""
    printed: Dict[int, int]
    derived: Dict[int, int]
    mismatches: Dict[int, tuple]
    printed_costs: Dict[str, int]
    derived_costs: Dict[str, int]
    reference_costs: Dict[str, int]

    @property
    def derived_reproduces_reference(self) -> bool:
        return self.derived_costs == self.reference_costs

    @property
    def printed_reproduces_reference(self) -> bool:
        return self.printed_costs == self.reference_costs

    def describe(self) -> List[str]:
        lines = []
        for split, (printed, derived) in sorted(self.mismatches.items()):
            lines.append(f"printed with-decision bucket s={split}: printed {printed}, derived from rows {derived}")
        lines.append(
            f"printed column gives square={self.printed_costs[SQUARE]}, loglinear={self.printed_costs[LOGLINEAR]}; "
            f"derived column gives square={self.derived_costs[SQUARE]}, loglinear={self.derived_costs[LOGLINEAR]}"
        )
        reproducing = [name for name, ok in (('derived', self.derived_reproduces_reference),
                                             ('printed', self.printed_reproduces_reference)) if ok]
        lines.append(
            f"published totals square={self.reference_costs[SQUARE]}, loglinear={self.reference_costs[LOGLINEAR]} "
            f"are reproduced by: {', '.join(reproducing) or 'neither column'}"
        )
        return lines


def histogram_discrepancy(stats: List[GroupPatternStats]) -> Optional[HistogramDiscrepancy]:
    """
    Compare the with-decision histogram of the rows against the printed one.

    Only applies to rows of the 780-good-bit table (same good-bit total and a
    without-decision histogram equal to the printed one); returns None
    otherwise or when nothing differs.
    """
    if structural_sums(stats)['good_bits'] != PRINTED_HISTOGRAM_GOOD_BITS:
        return None
    without = split_histogram(stats, WITHOUT_DECISION)
    if without != PRINTED_SPLIT_HISTOGRAMS[WITHOUT_DECISION]:
        return None
    derived = split_histogram(stats, WITH_DECISION)
    printed = SplitHistogram({s: c for s, c in PRINTED_SPLIT_HISTOGRAMS[WITH_DECISION].items() if c})
    if derived == printed:
        return None
    splits = sorted(set(derived.counts) | set(printed.counts))
    mismatches = {s: (printed.get(s), derived.get(s)) for s in splits if printed.get(s) != derived.get(s)}
    return HistogramDiscrepancy(
        printed=printed.to_dict(16),
        derived=derived.to_dict(16),
        mismatches=mismatches,
        printed_costs={model: sorting_cost(printed, 1, model) for model in COST_MODELS},
        derived_costs={model: sorting_cost(derived, 1, model) for model in COST_MODELS},
        reference_costs={
            SQUARE: PUBLISHED_COSTS['gf075_with_square'],
            LOGLINEAR: PUBLISHED_COSTS['gf075_with_loglinear'],
        },
    )


@dataclass
class AnalysisReport:
    source: str
    group_width: int
    rows: List[GroupPatternStats]
    sums: Dict[str, int]
    histograms: Dict[str, SplitHistogram]
    costs: Dict[str, Dict[str, int]]
    ratios: Dict[str, float]
    list_size: int = 1
    discrepancy: Optional[HistogramDiscrepancy] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'source': self.source,
            'group_width': self.group_width,
            'list_size': self.list_size,
            'rows': [
                {'bit_pattern': r.bit_pattern, 'good_pattern': r.good_pattern, 'N1': r.N1, 'M1': r.M1, 'M2': r.M2}
                for r in self.rows
            ],
            'sums': self.sums,
            'histograms': {mode: h.to_dict() for mode, h in self.histograms.items()},
            'costs': self.costs,
            'ratios': self.ratios,
            'histogram_discrepancy': None if self.discrepancy is None else {
                'printed': self.discrepancy.printed,
                'derived': self.discrepancy.derived,
                'printed_costs': self.discrepancy.printed_costs,
                'derived_costs': self.discrepancy.derived_costs,
            },
        }


def build_report(stats: List[GroupPatternStats], source: str, list_size: int = 1) -> AnalysisReport:
    """Histograms, the four costs, with/without ratios and structural sums of a pattern table."""
    width = len(stats[0].bit_pattern) if stats else 0
    histograms = {mode: split_histogram(stats, mode) for mode in (WITHOUT_DECISION, WITH_DECISION)}
    costs = {
        mode: {model: sorting_cost(histograms[mode], list_size, model) for model in COST_MODELS}
        for mode in histograms
    }
    ratios = {}
    for model in COST_MODELS:
        if costs[WITHOUT_DECISION][model] > 0:
            ratios[model] = cost_ratio(costs[WITH_DECISION][model], costs[WITHOUT_DECISION][model])
    report = AnalysisReport(
        source=source,
        group_width=width,
        rows=list(stats),
        sums=structural_sums(stats),
        histograms=histograms,
        costs=costs,
        ratios=ratios,
        list_size=list_size,
        discrepancy=histogram_discrepancy(stats),
    )
    if report.discrepancy is not None:
        report.notes.extend(report.discrepancy.describe())
    return report


def format_report(report: AnalysisReport) -> List[str]:
    """Plain-text rendering: pattern table, split table, costs and notes."""
    lines = [f"Pattern table ({report.source}, m={report.group_width})",
             f"{'bit_pattern':<12}{'good_pattern':<14}{'N1':>6}{'M1':>6}{'M2':>6}"]
    for r in report.rows:
        lines.append(f"{r.bit_pattern:<12}{r.good_pattern:<14}{r.N1:>6}{r.M1:>6}{r.M2:>6}")
    lines.append(
        f"sums: groups={report.sums['groups']} info_bits={report.sums['info_bits']} "
        f"good_bits={report.sums['good_bits']}"
    )

    without = report.histograms[WITHOUT_DECISION]
    with_ = report.histograms[WITH_DECISION]
    max_split = max(without.splits() + with_.splits() + [2])
    lines.append("")
    lines.append(f"{'splits':<8}{'without':>10}{'with':>10}")
    for split in without.to_dict(max_split):
        lines.append(f"{split:<8}{without.get(split):>10}{with_.get(split):>10}")

    lines.append("")
    suffix = f" (x L={report.list_size})" if report.list_size != 1 else ""
    for model in COST_MODELS:
        ratio = report.ratios.get(model)
        ratio_text = f"{ratio:.1f}%" if ratio is not None else "n/a"
        lines.append(
            f"cost {model:<9} without={report.costs[WITHOUT_DECISION][model]} "
            f"with={report.costs[WITH_DECISION][model]} ratio={ratio_text}{suffix}"
        )
    if report.notes:
        lines.append("")
        lines.extend(report.notes)
    return lines
