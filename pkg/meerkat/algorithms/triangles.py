"""Triangle counting by adjacency intersection, static and batch-dynamic.

`tc_count(g1, g2, edges)` sums |adj_g1(u) & adj_g2(v)| over the edges. With
the graph after the batch (A) and the batch as a graph (U), the three tallies
s1 = count(A, A), s2 = count(A, U) and s3 = count(U, U) give the change in
triangles for insertions and deletions.
"""

import functools
import logging
from dataclasses import dataclass

import numpy as np

from meerkat.exceptions import DivisibilityViolationError, NotSymmetricError
from meerkat.graph_core import DynamicGraph, EdgeBatch, search_edge
from meerkat.iterators import begin, end, slab_neighbors, walk
from meerkat.lane_engine import group_reduce_sum
from meerkat.utils.workers import run_stripes


@dataclass(frozen=True)
class TriangleDelta:
  s1: int
  s2: int
  s3: int
  delta: int


def _count_stripe(
  g1: DynamicGraph,
  g2: DynamicGraph,
  src: list[int],
  dst: list[int],
  lo: int,
  hi: int,
) -> int:
  tally = 0
  for k in range(lo, hi):
    u, v = src[k], dst[k]
    if u == v:
      continue
    for cursor in walk(begin(g1, u), end(g1, u)):
      neighbors, _ = slab_neighbors(cursor)
      hits = np.array(
        [
          w != u and w != v and search_edge(g2, v, w)[0]
          for w in neighbors.tolist()
        ],
        dtype=np.int64,
      )
      tally += group_reduce_sum(hits)
  return tally


def tc_count(g1: DynamicGraph, g2: DynamicGraph, edges: EdgeBatch) -> int:
  """Sum over directed edges (u, v) of |adj_g1(u) & adj_g2(v)|.

  Self-loop edges and intersection elements equal to u or v are skipped.
  """
  src, dst = edges.src.tolist(), edges.dst.tolist()
  return sum(
    run_stripes(
      len(src),
      g1.width,
      functools.partial(_count_stripe, g1, g2, src, dst),
      g1.workers,
    )
  )


def all_edges(g: DynamicGraph) -> EdgeBatch:
  src, dst, _ = g.edges()
  return EdgeBatch(src, dst)


def check_symmetric(g: DynamicGraph) -> None:
  src, dst, _ = g.edges()
  for u, v in zip(src.tolist(), dst.tolist()):
    if not search_edge(g, v, u)[0]:
      raise NotSymmetricError(
        f"Edge ({u}, {v}) is stored without its reverse ({v}, {u})."
      )


def tc_static(g: DynamicGraph) -> int:
  check_symmetric(g)
  tally = tc_count(g, g, all_edges(g))
  if tally % 6:
    raise DivisibilityViolationError(
      f"Static tally {tally} is not divisible by 6."
    )
  return tally // 6


def _tallies(
  g_after: DynamicGraph, g_update: DynamicGraph, batch: EdgeBatch
) -> tuple[int, int, int]:
  edges = batch.oriented()
  s1 = tc_count(g_after, g_after, edges)
  s2 = tc_count(g_after, g_update, edges)
  s3 = tc_count(g_update, g_update, edges)
  if s1 % 2 or s2 % 2 or s3 % 6:
    raise DivisibilityViolationError(
      f"Tallies s1={s1}, s2={s2}, s3={s3} break the counting identities; "
      "was the batch disjoint from the graph?"
    )
  logging.debug("triangle tallies: s1=%d s2=%d s3=%d", s1, s2, s3)
  return s1, s2, s3


def tc_incremental(
  g_after: DynamicGraph, g_update: DynamicGraph, batch_directed: EdgeBatch
) -> TriangleDelta:
  """Triangles gained by inserting the batch (already in `g_after`)."""
  s1, s2, s3 = _tallies(g_after, g_update, batch_directed)
  return TriangleDelta(s1, s2, s3, s1 // 2 - s2 // 2 + s3 // 6)


def tc_decremental(
  g_after: DynamicGraph, g_update: DynamicGraph, batch_directed: EdgeBatch
) -> TriangleDelta:
  """Triangles lost by deleting the batch (already gone from `g_after`)."""
  s1, s2, s3 = _tallies(g_after, g_update, batch_directed)
  return TriangleDelta(s1, s2, s3, s1 // 2 + s2 // 2 + s3 // 6)
