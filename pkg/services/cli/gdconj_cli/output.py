import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

from gdconj_models import Report
from gdconj_solver import CurveSample

from gdconj_cli.loader import ConfigError

CURVE_COLUMNS = ("x", "phi")


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def render_json(report: Report, with_timings: bool = False) -> str:
    exclude = None if with_timings else {"timings"}
    payload = report.model_dump(mode="json", exclude=exclude, exclude_none=True)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render(report: Report, fmt: str | None, with_timings: bool = False) -> str:
    if fmt == "csv" and not report.tabular:
        raise ConfigError(f"{report.command} has no table to write as csv")
    if report.tabular and (fmt or "csv") == "csv":
        return render_csv(report.columns or [], report.rows or [])
    return render_json(report, with_timings=with_timings)


def emit_curve_csv(sample: CurveSample | Sequence[Sequence[float]], out: str | None) -> None:
    """Header `x,phi`, then the sampled graph points in increasing x."""
    points = sample.points if isinstance(sample, CurveSample) else sample
    emit(render_csv(CURVE_COLUMNS, points), out)


def emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
