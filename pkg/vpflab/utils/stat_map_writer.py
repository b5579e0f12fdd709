"""
CSV and JSON serialization of StatMaps
"""

import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from vpflab.core.errors import OutputError
from vpflab.models.stat_map import StatMap

MAP_COLUMNS = ("statistic", "q1", "q2", "alpha_i", "alpha_p", "count", "seed", "value")
CURVE_COLUMNS = tuple(c for c in MAP_COLUMNS if c != "q2")

METADATA_PREFIX = "# config: "


def format_number(value: float) -> str:
    """Fixed 17-significant-digit rendering"""
    return f"{value:.17g}"


def _records(maps: Sequence[StatMap]) -> List[Dict[str, Any]]:
    records = []
    for stat_map in maps:
        for q1, q2, value, seed in stat_map.cells():
            record: Dict[str, Any] = {
                "statistic": stat_map.statistic.value,
                "q1": q1,
                "alpha_i": stat_map.alpha_i,
                "alpha_p": stat_map.alpha_p,
                "count": stat_map.count,
                "seed": stat_map.base_seed if seed is None else seed,
                "value": value,
            }
            if not stat_map.is_curve:
                record["q2"] = q2
            records.append(record)
    return records


def _columns(maps: Sequence[StatMap]) -> Sequence[str]:
    return CURVE_COLUMNS if maps and all(m.is_curve for m in maps) else MAP_COLUMNS


def format_csv(maps: Sequence[StatMap], metadata: Dict[str, Any]) -> str:
    """
    Render maps as CSV

    The first line records the effective configuration as JSON after ``# config: ``. Curves omit
    the q2 column.
    """
    columns = _columns(maps)
    buffer = io.StringIO()
    buffer.write(METADATA_PREFIX + json.dumps(metadata, sort_keys=True) + "\n")

    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in _records(maps):
        row = []
        for column in columns:
            value = record.get(column, "")
            row.append(format_number(value) if isinstance(value, float) else str(value))
        writer.writerow(row)
    return buffer.getvalue()


def format_json(maps: Sequence[StatMap], metadata: Dict[str, Any]) -> str:
    """Render maps as JSON with the same records as the CSV form"""
    columns = _columns(maps)
    records = [{c: r.get(c) for c in columns} for r in _records(maps)]
    return json.dumps({"config": metadata, "records": records}, sort_keys=True, indent=2) + "\n"


def write_output(text: str, path: Optional[str]) -> None:
    """
    Write rendered output to a file, or to stdout for ``-``

    The file is replaced, never appended to.

    Raises:
        OutputError: If the file cannot be written
    """
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise OutputError(f"Cannot write output: {e}", path=path) from e
