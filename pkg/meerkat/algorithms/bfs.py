"""Breadth-first search over unweighted graphs.

The static pass is level-synchronous over a vertex frontier. The dynamic
passes reuse the SSSP kernels with every edge weighing 1, so levels and
parents follow the same packed-node rules.
"""

import functools
import logging

import numpy as np

from meerkat.exceptions import WeightedGraphError
from meerkat.graph_core import DynamicGraph, EdgeBatch
from meerkat.iterators import adjacency_arrays
from meerkat.lane_engine import Frontier, group_enqueue_frontier
from meerkat.utils.workers import run_stripes

from .sssp import (
  DynamicRunStats,
  SsspTree,
  decremental_repair,
  incremental_relax,
  pack,
)


def _require_unweighted(g: DynamicGraph) -> None:
  if g.weighted:
    raise WeightedGraphError(
      "Level-based BFS needs an unweighted graph; use SSSP instead."
    )


def _expand_stripe(
  g: DynamicGraph,
  tree: SsspTree,
  level: int,
  current: np.ndarray,
  next_frontier: Frontier,
  lo: int,
  hi: int,
) -> None:
  for u in current[lo:hi].tolist():
    neighbors, _ = adjacency_arrays(g, u)
    neighbors = neighbors[neighbors != tree.src]
    if not neighbors.size:
      continue
    candidate = np.full(neighbors.size, pack(level + 1, u), dtype=np.uint64)
    reached = tree.nodes.min_many(neighbors, candidate)
    group_enqueue_frontier(
      next_frontier, reached, np.ones(reached.size, dtype=np.bool_)
    )


def bfs_static(g: DynamicGraph, src: int) -> SsspTree:
  _require_unweighted(g)
  g.check_vertex(src)
  tree = SsspTree.create(g.vertex_n, src)
  frontier = np.array([src], dtype=np.int64)
  level = 0
  while frontier.size:
    logging.debug("bfs level %d: %d vertices", level, frontier.size)
    next_frontier = Frontier(np.int64)
    run_stripes(
      frontier.size,
      g.width,
      functools.partial(_expand_stripe, g, tree, level, frontier, next_frontier),
      g.workers,
    )
    # A vertex whose parent improved within the level is reported twice.
    frontier = np.unique(next_frontier.items)
    level += 1
  tree.last_run = DynamicRunStats(relax_rounds=level)
  return tree


def bfs_levels(tree: SsspTree) -> np.ndarray:
  return tree.distances()


def bfs_incremental(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  _require_unweighted(g)
  return incremental_relax(g, tree, batch)


def bfs_decremental(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  _require_unweighted(g)
  return decremental_repair(g, tree, batch)
