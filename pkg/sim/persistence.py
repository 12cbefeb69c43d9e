"""
CSV and JSON persistence of sweep results.
"""

import csv
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Union

from simple_version import get_version
from .config import SimConfig
from .stats import SimResult

logger = logging.getLogger(__name__)

CSV_FIELDS = ['ebn0_db', 'frames', 'frame_errors', 'fer', 'fer_lo', 'fer_hi', 'ber', 'mean_list', 'mean_candidates']


def _format_row(summary: Dict[str, Any]) -> list:
    return [
        f"{summary['ebn0_db']:.2f}",
        str(summary['frames']),
        str(summary['frame_errors']),
        f"{summary['fer']:.6e}",
        f"{summary['fer_lo']:.6e}",
        f"{summary['fer_hi']:.6e}",
        f"{summary['ber']:.6e}",
        f"{summary['mean_list']:.4f}",
        f"{summary['mean_candidates']:.4f}",
    ]


def write_results_csv(result: SimResult, path: Union[str, Path]) -> Path:
    """Plot-ready CSV, one row per Eb/N0 in sweep order, UTF-8 with LF endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        for point in result.points:
            writer.writerow(_format_row(point.summary()))
    logger.info(f"💾 Results CSV written to {path}")
    return path


def results_document(result: SimResult, config: SimConfig, include_timestamp: bool = True) -> Dict[str, Any]:
    document = {
        'tool_version': get_version(),
        'config': config.to_dict(),
        'points': [dict(point.summary(), bit_errors=point.bit_errors, cached=point.cached)
                   for point in result.points],
        'warnings': list(result.warnings),
    }
    if include_timestamp:
        document['generated_at'] = datetime.now(timezone.utc).isoformat()
    return document


def write_results_json(result: SimResult, config: SimConfig, path: Union[str, Path]) -> Path:
    """JSON document embedding the full config for provenance."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(results_document(result, config), f, indent=2, sort_keys=True)
        f.write('\n')
    logger.info(f"💾 Results JSON written to {path}")
    return path


def read_results_json(path: Union[str, Path]) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)
