"""Slab, bucket and update cursors over one vertex's adjacency.

A cursor names one slab. `cursor_next` moves along the slab list and, for the
whole-adjacency and update kinds, on to the following (updated) list of the
same vertex in bucket order. The end cursor has handle INVALID_ADDRESS.
"""

import enum
from collections.abc import Iterator
from dataclasses import dataclass, field, replace

import numpy as np

from meerkat.exceptions import (
  IterateEndError,
  LaneOutOfRangeError,
  TrackingDisabledError,
)
from meerkat.graph_core import DynamicGraph
from meerkat.slab_store import (
  A_INDEX_POINTER,
  EMPTY_KEY,
  INVALID_ADDRESS,
  TOMBSTONE_KEY,
)

_END_BUCKET = -1


class CursorKind(enum.Enum):
  SLAB = "slab"
  BUCKET = "bucket"
  UPDATE = "update"


@dataclass(frozen=True)
class SlabCursor:
  graph: DynamicGraph = field(compare=False, repr=False)
  vertex: int
  bucket: int
  handle: int
  kind: CursorKind
  first_lane: int = 0

  @property
  def at_end(self) -> bool:
    return self.handle == INVALID_ADDRESS


def _end(g: DynamicGraph, v: int, kind: CursorKind, bucket: int) -> SlabCursor:
  return SlabCursor(g, v, bucket, INVALID_ADDRESS, kind)


def begin(g: DynamicGraph, v: int) -> SlabCursor:
  g.check_vertex(v)
  return SlabCursor(g, v, 0, A_INDEX_POINTER, CursorKind.SLAB)


def end(g: DynamicGraph, v: int) -> SlabCursor:
  g.check_vertex(v)
  return _end(g, v, CursorKind.SLAB, _END_BUCKET)


def begin_at(g: DynamicGraph, v: int, i: int) -> SlabCursor:
  g.list_at(v, i)
  return SlabCursor(g, v, i, A_INDEX_POINTER, CursorKind.BUCKET)


def end_at(g: DynamicGraph, v: int, i: int) -> SlabCursor:
  g.list_at(v, i)
  return _end(g, v, CursorKind.BUCKET, i)


def _first_update_from(g: DynamicGraph, v: int, bucket: int) -> SlabCursor:
  for i in range(bucket, int(g.bucket_count[v])):
    slab_list = g.list_at(v, i)
    if slab_list.is_updated:
      return SlabCursor(
        g,
        v,
        i,
        slab_list.update_handle,
        CursorKind.UPDATE,
        slab_list.update_lane,
      )
  return _end(g, v, CursorKind.UPDATE, _END_BUCKET)


def update_begin(g: DynamicGraph, v: int) -> SlabCursor:
  if not g.update_tracking:
    raise TrackingDisabledError(
      "Update iteration needs a graph built with update tracking."
    )
  g.check_vertex(v)
  return _first_update_from(g, v, 0)


def update_end(g: DynamicGraph, v: int) -> SlabCursor:
  if not g.update_tracking:
    raise TrackingDisabledError(
      "Update iteration needs a graph built with update tracking."
    )
  g.check_vertex(v)
  return _end(g, v, CursorKind.UPDATE, _END_BUCKET)


def cursor_next(c: SlabCursor) -> SlabCursor:
  if c.at_end:
    raise IterateEndError("Cannot advance past the end cursor.")
  g = c.graph
  next_handle = g.list_at(c.vertex, c.bucket).next_handle(c.handle)
  if next_handle != INVALID_ADDRESS:
    return replace(c, handle=next_handle, first_lane=0)
  if c.kind is CursorKind.BUCKET:
    return _end(g, c.vertex, c.kind, c.bucket)
  if c.kind is CursorKind.UPDATE:
    return _first_update_from(g, c.vertex, c.bucket + 1)
  if c.bucket + 1 < int(g.bucket_count[c.vertex]):
    return SlabCursor(g, c.vertex, c.bucket + 1, A_INDEX_POINTER, c.kind)
  return _end(g, c.vertex, c.kind, _END_BUCKET)


def cursor_slab(c: SlabCursor) -> np.ndarray:
  if c.at_end:
    raise IterateEndError("The end cursor does not reference a slab.")
  return c.graph.list_at(c.vertex, c.bucket).slab(c.handle)


def cursor_get(c: SlabCursor, lane: int) -> int:
  if not 0 <= lane < c.graph.width:
    raise LaneOutOfRangeError(
      f"Lane {lane} is outside a group of width {c.graph.width}."
    )
  return int(cursor_slab(c)[lane])


def cursor_first_lane(c: SlabCursor) -> int:
  return c.first_lane


def cursor_valid_lanes(c: SlabCursor) -> np.ndarray:
  """Key lanes of the slab holding live neighbours, from first_lane on."""
  lanes = c.graph.layout.key_lanes
  keys = cursor_slab(c)[lanes]
  mask = (keys != EMPTY_KEY) & (keys != TOMBSTONE_KEY) & (lanes >= c.first_lane)
  return lanes[mask]


def walk(first: SlabCursor, last: SlabCursor) -> Iterator[SlabCursor]:
  cursor = first
  while cursor != last:
    yield cursor
    cursor = cursor_next(cursor)


def slab_neighbors(c: SlabCursor) -> tuple[np.ndarray, np.ndarray | None]:
  """Live neighbours (and weights) of one slab, read in a single pass."""
  slab = cursor_slab(c)
  lanes = cursor_valid_lanes(c)
  neighbors = slab[lanes].astype(np.int64)
  if c.graph.weighted:
    return neighbors, slab[lanes + 1].astype(np.int64)
  return neighbors, None


def adjacency_arrays(
  g: DynamicGraph, v: int
) -> tuple[np.ndarray, np.ndarray | None]:
  """All live neighbours of v (and weights), in slab-iterator order."""
  parts = [slab_neighbors(c) for c in walk(begin(g, v), end(g, v))]
  neighbors = np.concatenate([p[0] for p in parts])
  if not g.weighted:
    return neighbors, None
  return neighbors, np.concatenate([p[1] for p in parts if p[1] is not None])
