"""
CSV and JSON emitters for campaign rows and ad-hoc result records.

Output is a pure function of its input. Columns and JSON keys keep field
order and lines end in ``\\n``, so identical rows give
byte-identical files.
"""

import contextlib
import csv
import io
import json
import sys
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from harness.Campaign import VerificationRow

VERIFICATION_COLUMNS = (
    "n", "weights", "d_a", "e_a", "predicted", "equal",
    "witness_d", "witness_e", "nodes", "elapsed_ms", "status",
)


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Yield a text stream for ``path``, or stdout when ``path`` is None or ``-``."""
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def render_rows_csv(rows: Sequence[VerificationRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(VERIFICATION_COLUMNS)
    for row in rows:
        record = row.as_dict()
        writer.writerow([_csv_cell(record[column]) for column in VERIFICATION_COLUMNS])
    return buffer.getvalue()


def render_rows_json(rows: Sequence[VerificationRow]) -> str:
    payload = [{column: row.as_dict()[column] for column in VERIFICATION_COLUMNS} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def write_rows(rows: Sequence[VerificationRow], output_format: str, path: Optional[str]) -> None:
    """
    Emit the verification table.

    Raises
    ------
    ValueError
        If ``output_format`` is neither ``csv`` nor ``json``.
    """
    if output_format == "csv":
        text = render_rows_csv(rows)
    elif output_format == "json":
        text = render_rows_json(rows)
    else:
        raise ValueError(f"Unknown output format {output_format!r}; expected csv or json.")
    with open_output(path) as out:
        out.write(text)


def render_records(records: List[Dict[str, Any]], output_format: str) -> str:
    """
    Render flat result dicts (constants, suite reports).

    ``text`` gives ``key=value`` lines separated by blank lines, ``csv`` uses
    the keys of the first record as header, ``json`` an array.
    """
    if output_format == "json":
        return json.dumps(records, indent=2) + "\n"
    if output_format == "csv":
        buffer = io.StringIO()
        if records:
            columns = list(records[0])
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(columns)
            for record in records:
                writer.writerow([_csv_cell(record.get(column)) for column in columns])
        return buffer.getvalue()
    if output_format == "text":
        blocks = ["\n".join(f"{key}={_csv_cell(value)}" for key, value in record.items()) for record in records]
        return "\n\n".join(blocks) + ("\n" if blocks else "")
    raise ValueError(f"Unknown output format {output_format!r}; expected text, csv or json.")


def write_records(records: List[Dict[str, Any]], output_format: str, path: Optional[str]) -> None:
    text = render_records(records, output_format)
    with open_output(path) as out:
        out.write(text)
