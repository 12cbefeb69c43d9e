"""
Pattern table CSV reader and writer.

Format: header `bit_pattern,good_pattern,N1`, patterns as 0/1 strings.
Written tables add M1 and M2 columns; when a file carries them they are
checked against the patterns. A blank bit_pattern repeats the previous row's
pattern, as in the published table layout.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, List, Union

from errors import AnalysisError, FixtureFormatError
from .patterns import GroupPatternStats

logger = logging.getLogger(__name__)

FIXTURE_FIELDS = ['bit_pattern', 'good_pattern', 'N1']
EMITTED_FIELDS = FIXTURE_FIELDS + ['M1', 'M2']


def _parse_int(value: str, column: str, row_num: int, path) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise FixtureFormatError(f"{path}:{row_num}: column {column} is not an integer: '{value}'") from e


def read_pattern_table(path: Union[str, Path]) -> List[GroupPatternStats]:
    """
    Load a pattern table.

    Args:
        path: CSV file

    Returns:
        List[GroupPatternStats]: Rows in file order

    Raises:
        FixtureFormatError: Missing file, wrong header, malformed row or inconsistent M1/M2
    """
    path = Path(path)
    if not path.is_file():
        raise FixtureFormatError(f"Pattern table not found: {path}")

    rows = []
    with open(path, 'r', encoding='utf-8', newline='') as csvfile:
        reader = csv.DictReader(csvfile)
        fields = [f.strip() for f in (reader.fieldnames or [])]
        missing = [f for f in FIXTURE_FIELDS if f not in fields]
        if missing:
            raise FixtureFormatError(f"{path}: missing columns {missing}, expected header {','.join(FIXTURE_FIELDS)}")

        previous_bits = None
        for row_num, raw in enumerate(reader, start=2):
            row = {str(k).strip(): (v or '').strip() for k, v in raw.items() if k is not None}
            if not any(row.values()):
                continue
            bits = row['bit_pattern'] or previous_bits
            if bits is None:
                raise FixtureFormatError(f"{path}:{row_num}: first row needs a bit pattern")
            try:
                stats = GroupPatternStats(bits, row['good_pattern'], _parse_int(row['N1'], 'N1', row_num, path))
            except FixtureFormatError:
                raise
            except AnalysisError as e:
                raise FixtureFormatError(f"{path}:{row_num}: {e}") from e
            for column, expected in (('M1', stats.M1), ('M2', stats.M2)):
                if row.get(column):
                    if _parse_int(row[column], column, row_num, path) != expected:
                        raise FixtureFormatError(
                            f"{path}:{row_num}: {column}={row[column]} does not match patterns (expected {expected})"
                        )
            rows.append(stats)
            previous_bits = bits

    if not rows:
        raise FixtureFormatError(f"{path}: no pattern rows")
    widths = {len(r.bit_pattern) for r in rows}
    if len(widths) != 1:
        raise FixtureFormatError(f"{path}: mixed pattern widths {sorted(widths)}")
    logger.debug(f"Loaded {len(rows)} pattern rows from {path}")
    return rows


def write_pattern_table(path: Union[str, Path], stats: Iterable[GroupPatternStats]) -> None:
    """Write a table with M1/M2 columns, UTF-8 with LF line endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as csvfile:
        writer = csv.writer(csvfile, lineterminator='\n')
        writer.writerow(EMITTED_FIELDS)
        for s in stats:
            writer.writerow([s.bit_pattern, s.good_pattern, s.N1, s.M1, s.M2])
