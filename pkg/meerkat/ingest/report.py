import csv
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Literal

from meerkat.dataclass_utils import MeerkatJSONEncoder
from meerkat.utils.validate import validate

REPORT_COLUMNS = (
  "batch_idx",
  "t_dynamic_ms",
  "t_static_ms",
  "cum_dynamic",
  "cum_static",
  "s",
  "checksum",
)
ITERATION_COLUMNS = ("iterations_dynamic", "iterations_static")

ReportFormat = Literal["csv", "json"]


@dataclass
class ReportRow:
  batch_idx: int
  t_dynamic_ms: float
  t_static_ms: float
  cum_dynamic: float
  cum_static: float
  s: float
  checksum: str
  iterations_dynamic: int | None = None
  iterations_static: int | None = None


@dataclass
class Report:
  algorithm: str
  mode: str
  vertex_n: int
  edge_n: int
  batch_size: int
  seed: int
  baseline_ms: float
  baseline_checksum: str
  baseline_iterations: int | None = None
  rows: list[ReportRow] = field(default_factory=list)

  @property
  def columns(self) -> tuple[str, ...]:
    if self.algorithm == "pr":
      return REPORT_COLUMNS + ITERATION_COLUMNS
    return REPORT_COLUMNS

  @property
  def speedup(self) -> float | None:
    """Self-relative speedup after the last batch."""
    return self.rows[-1].s if self.rows else None


def speedup(cum_static: float, cum_dynamic: float) -> float:
  return cum_static / cum_dynamic if cum_dynamic > 0 else math.inf


def _row_dict(report: Report, row: ReportRow) -> dict:
  values = asdict(row)
  return {column: values[column] for column in report.columns}


@validate
def write_report(report: Report, path: Path, fmt: ReportFormat = "csv") -> None:
  """Writes one line per batch; json adds the run metadata around the rows."""
  if fmt == "csv":
    with open(path, "w", newline="") as f:
      writer = csv.DictWriter(f, fieldnames=list(report.columns))
      writer.writeheader()
      for row in report.rows:
        writer.writerow(_row_dict(report, row))
    return

  metadata = {
    key: value for key, value in asdict(report).items() if key != "rows"
  }
  with open(path, "w") as f:
    json.dump(
      {
        **metadata,
        "columns": list(report.columns),
        "rows": [_row_dict(report, row) for row in report.rows],
      },
      f,
      cls=MeerkatJSONEncoder,
      indent=2,
    )
