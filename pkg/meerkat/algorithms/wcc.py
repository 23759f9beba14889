"""Weakly connected components with a sampling union-find pipeline.

Static: hook every vertex to its smallest neighbour, union the vertices that
remain roots, find the most frequent label, union everything outside that
label with its neighbours, compress. Incremental: union only the cells written
since the last seal. Labels are component minima.
"""

import functools
import logging
from dataclasses import dataclass, field

import numpy as np

from meerkat.aux_structures import UnionFind
from meerkat.exceptions import TrackingDisabledError
from meerkat.graph_core import DynamicGraph, EdgeBatch, insert_edges, seal_updates
from meerkat.lane_engine import (
  AtomicArray,
  LaneGroup,
  expand_bucket_pairs,
  group_ballot,
  group_broadcast,
  group_dequeue,
  group_popcount,
  group_reduce_min,
  scheme1_for_each,
  scheme1_update_for_each,
  scheme2_for_each_slab,
)
from meerkat.utils.workers import run_stripes

from .triangles import check_symmetric


@dataclass
class WccState:
  uf: UnionFind
  to_union: np.ndarray
  label_count: np.ndarray = field(default_factory=lambda: np.empty(0))
  freq_label: int = -1

  def labels(self) -> np.ndarray:
    return self.uf.components()


def count_labels(
  labels: np.ndarray, width: int = 32, workers: int = 1
) -> tuple[np.ndarray, int]:
  """Label histogram and the most frequent label (smallest on ties).

  Each group repeatedly elects an uncounted lane, broadcasts its label and
  counts the lanes that share it with a ballot.
  """
  counts = AtomicArray(np.zeros(labels.size, dtype=np.int64))
  group = LaneGroup(width)

  def count_stripe(lo: int, hi: int) -> None:
    lane_labels = np.full(width, -1, dtype=np.int64)
    lane_labels[: hi - lo] = labels[lo:hi]
    pending = group.flags(hi - lo)
    while (lane := group_dequeue(pending)) >= 0:
      label = int(group_broadcast(lane_labels, lane)[0])
      same = (lane_labels == label) & pending
      pending &= ~same
      counts.fetch_add(label, 1 + group_popcount(group_ballot(same)))

  run_stripes(labels.size, width, count_stripe, workers)
  freq_label = int(np.argmax(counts.values)) if labels.size else -1
  return counts.values, freq_label


def _min_hook(
  uf: UnionFind, v: int, neighbors: np.ndarray, weights: np.ndarray | None
) -> None:
  smallest = group_reduce_min(neighbors)
  if smallest < v:
    uf.hook_min(v, smallest)


def _union_all(g: DynamicGraph, uf: UnionFind, vertices: np.ndarray) -> None:
  scheme1_for_each(
    g, vertices, lambda v, adjacent, lane, cursor: uf.union_async(v, adjacent)
  )


def wcc_init(g: DynamicGraph) -> WccState:
  """Runs the static pipeline and returns the state for later batches."""
  check_symmetric(g)
  n = g.vertex_n
  uf = UnionFind(n)
  pairs = expand_bucket_pairs(g, np.arange(n))
  scheme2_for_each_slab(g, *pairs, functools.partial(_min_hook, uf))

  parents = uf.parents.values
  _union_all(g, uf, np.flatnonzero(parents == np.arange(n)))

  uf.compress_all()
  label_count, freq_label = count_labels(parents.copy(), g.width, g.workers)
  _union_all(g, uf, np.flatnonzero(parents != freq_label))
  uf.compress_all()
  logging.debug("wcc: most frequent label %d", freq_label)
  return WccState(
    uf=uf,
    to_union=np.zeros(n, dtype=np.bool_),
    label_count=label_count,
    freq_label=freq_label,
  )


def wcc_static(g: DynamicGraph) -> np.ndarray:
  return wcc_init(g).labels()


def wcc_incremental(
  g: DynamicGraph, state: WccState, batch: EdgeBatch
) -> np.ndarray:
  """Inserts `batch` and merges components using only the new cells."""
  if not g.update_tracking:
    raise TrackingDisabledError(
      "Incremental WCC needs a graph built with update tracking."
    )
  edges = batch.oriented()
  insert_edges(g, edges)
  state.to_union[edges.src] = True
  vertices = np.flatnonzero(state.to_union)
  uf = state.uf
  scheme1_update_for_each(
    g, vertices, lambda v, adjacent, lane, cursor: uf.union_async(v, adjacent)
  )
  uf.compress_all()
  seal_updates(g)
  state.to_union[:] = False
  return uf.components()
