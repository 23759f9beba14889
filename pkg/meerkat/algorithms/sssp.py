"""Static, incremental and decremental single-source shortest paths.

Each vertex holds one 64-bit tree node: distance in the high half, parent in
the low half. Relaxation is an atomic min on the packed word, so the smaller
distance wins and ties go to the smaller parent id. That makes the fixpoint
unique, and the dynamic variants land on exactly the static tree.
"""

import functools
import logging
from dataclasses import dataclass, field

import numpy as np

from meerkat.exceptions import CycleDetectedError, UnweightedGraphError
from meerkat.graph_core import DynamicGraph, EdgeBatch
from meerkat.iterators import adjacency_arrays
from meerkat.lane_engine import (
  AtomicArray,
  Frontier,
  expand_bucket_pairs,
  group_enqueue_frontier,
  scheme2_for_each_slab,
)
from meerkat.slab_store import INVALID_VERTEX
from meerkat.utils.workers import run_stripes

INF = 2**32 - 1
INVALID_NODE = (INF << 32) | INVALID_VERTEX
_INVALID_WORD = np.uint64(INVALID_NODE)
_LOW_MASK = np.uint64(2**32 - 1)
_SHIFT = np.uint64(32)

EDGE_DTYPE = np.dtype([("src", np.int64), ("dst", np.int64), ("weight", np.int64)])


def pack(distance: int, parent: int) -> int:
  return (distance << 32) | parent


def node_distance(node: int) -> int:
  return node >> 32


def node_parent(node: int) -> int:
  return node & (2**32 - 1)


@dataclass
class DynamicRunStats:
  invalidated: int = 0
  propagated: int = 0
  frontier_edges: int = 0
  relax_rounds: int = 0


@dataclass
class SsspTree:
  nodes: AtomicArray
  src: int
  last_run: DynamicRunStats = field(default_factory=DynamicRunStats)

  @classmethod
  def create(cls, vertex_n: int, src: int) -> "SsspTree":
    nodes = np.full(vertex_n, INVALID_NODE, dtype=np.uint64)
    nodes[src] = pack(0, src)
    return cls(AtomicArray(nodes), src)

  def distances(self) -> np.ndarray:
    return self.nodes.values >> _SHIFT

  def parents(self) -> np.ndarray:
    return self.nodes.values & _LOW_MASK

  def copy(self) -> "SsspTree":
    return SsspTree(AtomicArray(self.nodes.values.copy()), self.src)


def edge_frontier(capacity: int = 1024) -> Frontier:
  return Frontier(EDGE_DTYPE, capacity)


def _edge_records(
  src: np.ndarray, dst: np.ndarray, weights: np.ndarray | None
) -> np.ndarray:
  records = np.empty(len(dst), dtype=EDGE_DTYPE)
  records["src"] = src
  records["dst"] = dst
  records["weight"] = 1 if weights is None else weights
  return records


def enqueue_out_edges(g: DynamicGraph, frontier: Frontier, u: int) -> None:
  neighbors, weights = adjacency_arrays(g, u)
  if neighbors.size:
    records = _edge_records(np.full(neighbors.size, u), neighbors, weights)
    group_enqueue_frontier(frontier, records, np.ones(len(records), np.bool_))


def _relax_stripe(
  g: DynamicGraph,
  tree: SsspTree,
  edges: np.ndarray,
  next_frontier: Frontier,
  lo: int,
  hi: int,
) -> None:
  batch = edges[lo:hi]
  u = batch["src"]
  dist_u = (tree.nodes.values[u] >> _SHIFT).astype(np.int64)
  candidate = dist_u + batch["weight"]
  ok = (dist_u != INF) & (candidate < INF) & (batch["dst"] != tree.src)
  packed = (candidate[ok].astype(np.uint64) << _SHIFT) | u[ok].astype(np.uint64)
  for v in tree.nodes.min_many(batch["dst"][ok], packed).tolist():
    enqueue_out_edges(g, next_frontier, v)


def relax_until_fixpoint(
  g: DynamicGraph, tree: SsspTree, frontier: Frontier
) -> int:
  """Runs the relax kernel round by round; returns the number of rounds."""
  rounds = 0
  while len(frontier):
    edges = frontier.items.copy()
    next_frontier = edge_frontier(max(1024, len(edges)))
    logging.debug("sssp round %d: %d frontier edges", rounds, len(edges))
    run_stripes(
      len(edges),
      g.width,
      functools.partial(_relax_stripe, g, tree, edges, next_frontier),
      g.workers,
    )
    frontier = next_frontier
    rounds += 1
  return rounds


def _require_weighted(g: DynamicGraph) -> None:
  if not g.weighted:
    raise UnweightedGraphError("SSSP needs a weighted graph; use BFS instead.")


def sssp_static(g: DynamicGraph, src: int) -> SsspTree:
  _require_weighted(g)
  g.check_vertex(src)
  tree = SsspTree.create(g.vertex_n, src)
  frontier = edge_frontier()
  enqueue_out_edges(g, frontier, src)
  tree.last_run = DynamicRunStats(
    frontier_edges=len(frontier),
    relax_rounds=relax_until_fixpoint(g, tree, frontier),
  )
  return tree


def incremental_relax(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  edges = batch.oriented()
  frontier = edge_frontier(max(1, len(edges)))
  if len(edges):
    records = _edge_records(
      edges.src, edges.dst, edges.weights if g.weighted else None
    )
    group_enqueue_frontier(frontier, records, np.ones(len(records), np.bool_))
  tree.last_run = DynamicRunStats(
    frontier_edges=len(frontier),
    relax_rounds=relax_until_fixpoint(g, tree, frontier),
  )
  return tree


def sssp_incremental(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  """Repairs the tree after `batch` was inserted into `g`.

  Inserted edges may only add paths. Raising the weight of an edge that is
  already stored is not an insertion and leaves stale distances.
  """
  _require_weighted(g)
  return incremental_relax(g, tree, batch)


def sssp_invalidate(g: DynamicGraph, tree: SsspTree, batch: EdgeBatch) -> int:
  """Invalidates every vertex whose tree edge was deleted."""
  edges = batch.oriented()
  if not len(edges):
    return 0
  parents = tree.parents()[edges.dst].astype(np.int64)
  hit = (parents == edges.src) & (edges.dst != tree.src)
  victims = np.unique(edges.dst[hit])
  tree.nodes.fill(victims, INVALID_NODE)
  return int(victims.size)


_UNKNOWN, _VALID, _INVALID = 0, 1, 2


def sssp_propagate_invalidation(g: DynamicGraph, tree: SsspTree) -> int:
  """Invalidates every vertex whose parent walk hits an invalid vertex."""
  nodes = tree.nodes.values
  was_valid = nodes != _INVALID_WORD
  status = np.zeros(g.vertex_n, dtype=np.int8)
  status[tree.src] = _VALID

  def resolve_stripe(lo: int, hi: int) -> None:
    for v in range(lo, hi):
      path: list[int] = []
      x = v
      while True:
        if status[x] != _UNKNOWN:
          verdict = status[x]
          break
        node = int(nodes[x])
        if node == INVALID_NODE:
          verdict = _INVALID
          break
        path.append(x)
        if len(path) > g.vertex_n:
          raise CycleDetectedError(
            f"Parent walk from vertex {v} did not reach source {tree.src}."
          )
        x = node_parent(node)
      for y in path:
        status[y] = verdict
        if verdict == _INVALID:
          nodes[y] = INVALID_NODE

  run_stripes(g.vertex_n, g.width, resolve_stripe, g.workers)
  return int((was_valid & (status == _INVALID)).sum())


def sssp_decremental_frontier(g: DynamicGraph, tree: SsspTree) -> Frontier:
  """All edges from a valid vertex into an invalid one."""
  nodes = tree.nodes.values
  invalid = nodes == _INVALID_WORD
  frontier = edge_frontier()
  if not invalid.any():
    return frontier

  def crossing(u: int, neighbors: np.ndarray, weights: np.ndarray | None):
    mask = invalid[neighbors]
    if mask.any():
      records = _edge_records(np.full(neighbors.size, u), neighbors, weights)
      group_enqueue_frontier(frontier, records, mask)

  valid = np.flatnonzero(~invalid)
  scheme2_for_each_slab(g, *expand_bucket_pairs(g, valid), crossing)
  return frontier


def decremental_repair(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  invalidated = sssp_invalidate(g, tree, batch)
  propagated = sssp_propagate_invalidation(g, tree) if invalidated else 0
  frontier = sssp_decremental_frontier(g, tree)
  tree.last_run = DynamicRunStats(
    invalidated=invalidated,
    propagated=propagated,
    frontier_edges=len(frontier),
    relax_rounds=relax_until_fixpoint(g, tree, frontier),
  )
  return tree


def sssp_decremental(
  g: DynamicGraph, tree: SsspTree, batch: EdgeBatch
) -> SsspTree:
  """Repairs the tree after `batch` was deleted from `g`."""
  _require_weighted(g)
  return decremental_repair(g, tree, batch)
