"""Edge-list files: SNAP-style pairs, weighted TSV and DIMACS shortest-path.

Vertex ids are compacted to [0, vertex_n) in ascending order of the original
ids; `original_ids[k]` is the id that compact vertex k had in the file.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from meerkat.exceptions import EmptyGraphError, ParseError
from meerkat.graph_core import EdgeBatch
from meerkat.utils.validate import validate
from meerkat.warn import warn

EdgeListFormat = Literal["auto", "snap", "dimacs-gr", "weighted-tsv"]

_COMMENT_PREFIXES = ("#", "%")


@dataclass
class EdgeList:
  edges: EdgeBatch
  vertex_n: int
  source_format: str
  original_ids: np.ndarray

  def __len__(self) -> int:
    return len(self.edges)

  @property
  def weighted(self) -> bool:
    return self.edges.weighted


def _detect_format(lines: list[str]) -> str:
  for line in lines:
    fields = line.split()
    if not fields or line.lstrip().startswith(_COMMENT_PREFIXES):
      continue
    if fields[0] in ("c", "p", "a"):
      return "dimacs-gr"
    return "weighted-tsv" if len(fields) == 3 else "snap"
  return "snap"


def _int_field(token: str, line_number: int) -> int:
  try:
    return int(token)
  except ValueError:
    raise ParseError(f"expected an integer, got {token!r}", line_number) from None


def _weight(w: int, line_number: int) -> int:
  if w < 1:
    raise ParseError(f"weight {w} is not positive", line_number)
  return w


def _records(
  lines: Iterable[str], fmt: str
) -> tuple[list[tuple[int, int]], list[int] | None]:
  pairs: list[tuple[int, int]] = []
  weights: list[int] = []
  columns: int | None = None
  for line_number, line in enumerate(lines, start=1):
    fields = line.split()
    if not fields or line.lstrip().startswith(_COMMENT_PREFIXES):
      continue
    if fmt == "dimacs-gr":
      if fields[0] in ("c", "p"):
        continue
      if fields[0] != "a" or len(fields) != 4:
        raise ParseError("expected `a u v w`", line_number)
      u, v, w = (_int_field(t, line_number) for t in fields[1:])
      if u < 1 or v < 1:
        raise ParseError("DIMACS vertex ids start at 1", line_number)
      pairs.append((u - 1, v - 1))
      weights.append(_weight(w, line_number))
      columns = 3
      continue
    expected = (3,) if fmt == "weighted-tsv" else (2, 3)
    if len(fields) not in expected or (
      columns is not None and len(fields) != columns
    ):
      raise ParseError(
        f"expected {columns or ' or '.join(map(str, expected))} columns, "
        f"got {len(fields)}",
        line_number,
      )
    columns = len(fields)
    values = [_int_field(t, line_number) for t in fields]
    if values[0] < 0 or values[1] < 0:
      raise ParseError("vertex ids must be non-negative", line_number)
    pairs.append((values[0], values[1]))
    if columns == 3:
      weights.append(_weight(values[2], line_number))

  return pairs, (weights if columns == 3 else None)


def parse_edge_lines(lines: Iterable[str], fmt: EdgeListFormat = "auto") -> EdgeList:
  lines = list(lines)
  resolved = _detect_format(lines) if fmt == "auto" else fmt
  pairs, weights = _records(lines, resolved)
  if not pairs:
    raise EmptyGraphError("The edge list has no edges.")

  raw = np.asarray(pairs, dtype=np.int64)
  original_ids, compact = np.unique(raw, return_inverse=True)
  compact = compact.reshape(raw.shape)
  if not np.array_equal(original_ids, np.arange(original_ids.size)):
    warn(
      f"Vertex ids were compacted: {original_ids.size} distinct ids, "
      f"largest {int(original_ids[-1])}."
    )

  batch = EdgeBatch(compact[:, 0], compact[:, 1], weights).oriented()
  if len(batch) < len(pairs):
    warn(f"Dropped {len(pairs) - len(batch)} duplicate edges; the last weight wins.")
  return EdgeList(
    edges=batch,
    vertex_n=int(original_ids.size),
    source_format=resolved,
    original_ids=original_ids,
  )


@validate
def parse_edge_list(path: Path, fmt: EdgeListFormat = "auto") -> EdgeList:
  """Reads an edge-list file; see `parse_edge_lines` for the line grammar."""
  with open(path) as f:
    return parse_edge_lines(f, fmt)
