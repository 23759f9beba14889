"""The two adjacency iteration schemes used by algorithm kernels.

Scheme 1 hands a stripe of W vertices to one lane group, which elects one
vertex at a time through its work queue and walks the vertex's whole
adjacency cooperatively. Scheme 2 has no work queue: every lane owns one
<vertex, bucket> pair and walks that single slab list.
"""

from collections.abc import Callable

import numpy as np

from meerkat.exceptions import MeerkatDeveloperException, TrackingDisabledError
from meerkat.graph_core import DynamicGraph
from meerkat.iterators import (
  SlabCursor,
  begin,
  begin_at,
  cursor_get,
  cursor_valid_lanes,
  end,
  end_at,
  slab_neighbors,
  update_begin,
  update_end,
  walk,
)
from meerkat.utils.workers import run_stripes

from .lane_group import LaneGroup, group_broadcast, group_dequeue

# visitor(vertex, adjacent, lane, cursor)
CellVisitor = Callable[[int, int, int, SlabCursor], None]
# slab_visitor(vertex, neighbors, weights)
SlabVisitor = Callable[[int, np.ndarray, "np.ndarray | None"], None]


def _visit_cells(
  vertex: int, first: SlabCursor, last: SlabCursor, visitor: CellVisitor
) -> None:
  for cursor in walk(first, last):
    for lane in cursor_valid_lanes(cursor).tolist():
      visitor(vertex, cursor_get(cursor, lane), lane, cursor)


def _work_queue(
  g: DynamicGraph,
  vertices: np.ndarray,
  group_width: int | None,
  workers: int | None,
  walk_vertex: Callable[[int], None],
) -> None:
  width = group_width or g.width
  group = LaneGroup(width)

  def run_group(lo: int, hi: int) -> None:
    work = np.full(width, -1, dtype=np.int64)
    work[: hi - lo] = vertices[lo:hi]
    flags = group.flags(hi - lo)
    while (lane := group_dequeue(flags)) >= 0:
      walk_vertex(int(group_broadcast(work, lane)[0]))

  run_stripes(len(vertices), width, run_group, workers or g.workers)


def scheme1_for_each(
  g: DynamicGraph,
  vertices: "np.ndarray | list[int]",
  visitor: CellVisitor,
  *,
  group_width: int | None = None,
  workers: int | None = None,
) -> None:
  _work_queue(
    g,
    np.asarray(vertices, dtype=np.int64),
    group_width,
    workers,
    lambda v: _visit_cells(v, begin(g, v), end(g, v), visitor),
  )


def scheme1_update_for_each(
  g: DynamicGraph,
  vertices: "np.ndarray | list[int]",
  visitor: CellVisitor,
  *,
  group_width: int | None = None,
  workers: int | None = None,
) -> None:
  """Like scheme 1, but only over cells written since the last seal."""
  if not g.update_tracking:
    raise TrackingDisabledError(
      "Update iteration needs a graph built with update tracking."
    )
  _work_queue(
    g,
    np.asarray(vertices, dtype=np.int64),
    group_width,
    workers,
    lambda v: _visit_cells(v, update_begin(g, v), update_end(g, v), visitor),
  )


def expand_bucket_pairs(
  g: DynamicGraph, vertices: "np.ndarray | list[int]"
) -> tuple[np.ndarray, np.ndarray]:
  """Expands vertices into one <vertex, bucket> pair per slab list."""
  vertices = np.asarray(vertices, dtype=np.int64)
  counts = g.bucket_count[vertices]
  bucket_vertex = np.repeat(vertices, counts)
  starts = np.repeat(np.cumsum(counts) - counts, counts)
  bucket_index = np.arange(bucket_vertex.size, dtype=np.int64) - starts
  return bucket_vertex, bucket_index


def _check_pairs(bucket_vertex: np.ndarray, bucket_index: np.ndarray) -> None:
  if bucket_vertex.shape != bucket_index.shape:
    raise MeerkatDeveloperException(
      "bucket_vertex and bucket_index must have equal lengths."
    )


def scheme2_for_each(
  g: DynamicGraph,
  bucket_vertex: "np.ndarray | list[int]",
  bucket_index: "np.ndarray | list[int]",
  visitor: CellVisitor,
  *,
  group_width: int | None = None,
  workers: int | None = None,
) -> None:
  bucket_vertex = np.asarray(bucket_vertex, dtype=np.int64)
  bucket_index = np.asarray(bucket_index, dtype=np.int64)
  _check_pairs(bucket_vertex, bucket_index)

  def run_group(lo: int, hi: int) -> None:
    for v, i in zip(bucket_vertex[lo:hi].tolist(), bucket_index[lo:hi].tolist()):
      _visit_cells(v, begin_at(g, v, i), end_at(g, v, i), visitor)

  run_stripes(
    len(bucket_vertex), group_width or g.width, run_group, workers or g.workers
  )


def scheme2_for_each_slab(
  g: DynamicGraph,
  bucket_vertex: "np.ndarray | list[int]",
  bucket_index: "np.ndarray | list[int]",
  slab_visitor: SlabVisitor,
  *,
  group_width: int | None = None,
  workers: int | None = None,
) -> None:
  """Scheme 2 with the whole slab read at once.

  The visitor receives the live neighbours of one slab (and their weights
  for map slabs) instead of one call per cell.
  """
  bucket_vertex = np.asarray(bucket_vertex, dtype=np.int64)
  bucket_index = np.asarray(bucket_index, dtype=np.int64)
  _check_pairs(bucket_vertex, bucket_index)

  def run_group(lo: int, hi: int) -> None:
    for v, i in zip(bucket_vertex[lo:hi].tolist(), bucket_index[lo:hi].tolist()):
      for cursor in walk(begin_at(g, v, i), end_at(g, v, i)):
        neighbors, weights = slab_neighbors(cursor)
        if neighbors.size:
          slab_visitor(v, neighbors, weights)

  run_stripes(
    len(bucket_vertex), group_width or g.width, run_group, workers or g.workers
  )
