"""The dynamic graph object: bucketed slab lists per vertex."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from meerkat.config import app_config
from meerkat.exceptions import (
  BadLoadFactorError,
  BucketOutOfRangeError,
  CapacityOverflowError,
  MeerkatDeveloperException,
  VertexOutOfRangeError,
)
from meerkat.slab_store import (
  InsertOutcome,
  SlabLayout,
  SlabList,
  SlabPool,
  head_arena_build,
)
from meerkat.slab_store.constants import MAX_VERTEX_ID
from meerkat.utils.workers import run_stripes

from .edge_batch import EdgeBatch

HASH_PRIME = 4294967291
DEFAULT_HASH_A = 2654435761
DEFAULT_HASH_B = 1013904223


@dataclass(frozen=True)
class HashParams:
  """Universal hash ((a * key + b) mod p) mod bucket_count."""

  a: int = DEFAULT_HASH_A
  b: int = DEFAULT_HASH_B
  p: int = HASH_PRIME

  @classmethod
  def from_seed(cls, seed: int) -> "HashParams":
    rng = np.random.default_rng(seed)
    return cls(
      a=int(rng.integers(1, HASH_PRIME)), b=int(rng.integers(0, HASH_PRIME))
    )

  def bucket(self, key: int, bucket_count: int) -> int:
    return ((self.a * key + self.b) % self.p) % bucket_count


@dataclass(frozen=True)
class MemoryStats:
  arena_slabs: int
  pool_slabs: int
  pool_high_water: int
  live_cells: int


def bucket_counts(
  degree_hints: np.ndarray,
  load_factor: float,
  capacity: int,
  hashing_enabled: bool = True,
) -> np.ndarray:
  hints = np.asarray(degree_hints, dtype=np.float64)
  if not hashing_enabled:
    return np.ones(hints.size, dtype=np.int64)
  counts = np.ceil(hints / (load_factor * capacity)).astype(np.int64)
  return np.maximum(counts, 1)


class DynamicGraph:
  """Adjacency store where vertex v owns `bucket_count[v]` slab lists.

  Head slabs of every list live in one arena; overflow slabs come from a
  shared pool. Edges (u, v) are stored in list (u, bucket_of(u, v)).
  """

  def __init__(
    self,
    vertex_n: int,
    bucket_count: np.ndarray,
    *,
    load_factor: float,
    weighted: bool,
    hashing_enabled: bool,
    update_tracking: bool,
    hash_params: HashParams,
    width: int,
    workers: int,
    max_slabs: int,
  ):
    self.vertex_n = vertex_n
    self.load_factor = load_factor
    self.weighted = weighted
    self.hashing_enabled = hashing_enabled
    self.update_tracking = update_tracking
    self.hash_params = hash_params
    self.workers = workers
    self.layout = SlabLayout(width=width, weighted=weighted)
    self.arena = head_arena_build(bucket_count, width, max_slabs=max_slabs)
    self.pool = SlabPool(width, max_slabs=max(0, max_slabs - self.arena.total))
    self.lists = [
      SlabList(
        self.arena.slabs[i], self.pool, self.layout, track_updates=update_tracking
      )
      for i in range(self.arena.total)
    ]
    self.updated_vertices = np.zeros(vertex_n, dtype=np.bool_)

  @property
  def bucket_count(self) -> np.ndarray:
    return self.arena.bucket_count

  @property
  def width(self) -> int:
    return self.layout.width

  def check_vertex(self, v: int) -> None:
    if not 0 <= v < self.vertex_n:
      raise VertexOutOfRangeError(
        f"Vertex {v} is out of range for a graph of {self.vertex_n} vertices."
      )

  def list_at(self, v: int, bucket: int) -> SlabList:
    self.check_vertex(v)
    if not 0 <= bucket < int(self.bucket_count[v]):
      raise BucketOutOfRangeError(
        f"Vertex {v} has {int(self.bucket_count[v])} slab lists; "
        f"bucket {bucket} does not exist."
      )
    return self.lists[self.arena.index(v, bucket)]

  def vertex_lists(self, v: int) -> list[SlabList]:
    self.check_vertex(v)
    start = int(self.arena.offsets[v])
    return self.lists[start : start + int(self.bucket_count[v])]

  def vertex_updated(self, v: int) -> bool:
    self.check_vertex(v)
    return bool(self.updated_vertices[v])

  def edges(self) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """All stored edges as parallel (src, dst, weights) arrays."""
    src: list[int] = []
    dst: list[int] = []
    weights: list[int] = []
    for v in range(self.vertex_n):
      for slab_list in self.vertex_lists(v):
        for key, weight in slab_list.entries():
          src.append(v)
          dst.append(key)
          if weight is not None:
            weights.append(weight)
    return (
      np.asarray(src, dtype=np.int64),
      np.asarray(dst, dtype=np.int64),
      np.asarray(weights, dtype=np.int64) if self.weighted else None,
    )

  def memory_stats(self) -> MemoryStats:
    return MemoryStats(
      arena_slabs=self.arena.total,
      pool_slabs=self.pool.live,
      pool_high_water=self.pool.high_water,
      live_cells=edge_count(self),
    )


def graph_new(
  vertex_n: int,
  degree_hints: "np.ndarray | list[int] | None" = None,
  lf: float | None = None,
  weighted: bool = False,
  hashing_enabled: bool | None = None,
  update_tracking: bool = False,
  *,
  width: int | None = None,
  hash_params: HashParams | None = None,
  workers: int | None = None,
  max_slabs: int | None = None,
) -> DynamicGraph:
  """Creates an empty graph sized from per-vertex degree hints.

  Missing hints mean one bucket per vertex. Unset keyword arguments take
  their value from the process config.
  """
  lf = app_config.load_factor if lf is None else lf
  if not 0 < lf <= 1:
    raise BadLoadFactorError(f"Load factor must be in (0, 1]. Received: {lf}")
  if vertex_n < 1:
    raise MeerkatDeveloperException("A graph needs at least one vertex.")
  if vertex_n > MAX_VERTEX_ID + 1:
    raise CapacityOverflowError(
      f"{vertex_n} vertices do not fit in the 32-bit id space."
    )
  if degree_hints is None:
    hints = np.ones(vertex_n, dtype=np.int64)
  else:
    hints = np.asarray(degree_hints, dtype=np.int64)
    if hints.shape != (vertex_n,):
      raise MeerkatDeveloperException(
        f"Expected {vertex_n} degree hints, received {hints.size}."
      )
  hashing_enabled = (
    app_config.hashing_enabled if hashing_enabled is None else hashing_enabled
  )
  width = app_config.group_width if width is None else width
  layout = SlabLayout(width=width, weighted=weighted)
  counts = bucket_counts(hints, lf, layout.capacity, hashing_enabled)
  g = DynamicGraph(
    vertex_n,
    counts,
    load_factor=lf,
    weighted=weighted,
    hashing_enabled=hashing_enabled,
    update_tracking=update_tracking,
    hash_params=hash_params or HashParams(),
    width=width,
    workers=app_config.workers if workers is None else workers,
    max_slabs=app_config.max_pool_slabs if max_slabs is None else max_slabs,
  )
  logging.debug(
    "graph_new: %d vertices, %d head slabs", vertex_n, g.arena.total
  )
  return g


def bucket_of(g: DynamicGraph, v: int, key: int) -> int:
  count = int(g.bucket_count[v])
  if not g.hashing_enabled or count == 1:
    return 0
  return g.hash_params.bucket(int(key), count)


def _prepare(g: DynamicGraph, batch: EdgeBatch, need_weights: bool) -> EdgeBatch:
  edges = batch.oriented()
  if len(edges):
    low = min(int(edges.src.min()), int(edges.dst.min()))
    high = max(int(edges.src.max()), int(edges.dst.max()))
    if low < 0 or high >= g.vertex_n:
      raise VertexOutOfRangeError(
        f"Batch references vertex {high if high >= g.vertex_n else low}; "
        f"the graph has {g.vertex_n} vertices."
      )
  if need_weights and g.weighted and edges.weights is None:
    raise MeerkatDeveloperException("Weighted graphs need weighted batches.")
  return edges


def insert_edges(g: DynamicGraph, batch: EdgeBatch) -> int:
  """Inserts the batch and returns how many edges were new."""
  edges = _prepare(g, batch, need_weights=True)
  src = edges.src.tolist()
  dst = edges.dst.tolist()
  weights = (
    edges.weights.tolist()
    if g.weighted and edges.weights is not None
    else None
  )

  def insert_stripe(lo: int, hi: int) -> int:
    inserted = 0
    for k in range(lo, hi):
      u, v = src[k], dst[k]
      slab_list = g.lists[g.arena.index(u, bucket_of(g, u, v))]
      outcome = slab_list.insert(v, None if weights is None else weights[k])
      if outcome is InsertOutcome.INSERTED:
        inserted += 1
        if g.update_tracking:
          g.updated_vertices[u] = True
    return inserted

  return sum(run_stripes(len(src), g.width, insert_stripe, g.workers))


def delete_edges(g: DynamicGraph, batch: EdgeBatch) -> int:
  """Deletes the batch and returns how many edges were present."""
  edges = _prepare(g, batch, need_weights=False)
  src = edges.src.tolist()
  dst = edges.dst.tolist()

  def delete_stripe(lo: int, hi: int) -> int:
    deleted = 0
    for k in range(lo, hi):
      u, v = src[k], dst[k]
      if g.lists[g.arena.index(u, bucket_of(g, u, v))].delete(v):
        deleted += 1
    return deleted

  return sum(run_stripes(len(src), g.width, delete_stripe, g.workers))


def search_edge(g: DynamicGraph, u: int, v: int) -> tuple[bool, int | None]:
  g.check_vertex(u)
  g.check_vertex(v)
  return g.lists[g.arena.index(u, bucket_of(g, u, v))].search(v)


def seal_updates(g: DynamicGraph) -> None:
  for v in np.flatnonzero(g.updated_vertices).tolist():
    for slab_list in g.vertex_lists(v):
      slab_list.seal()
  g.updated_vertices[:] = False


def degree(g: DynamicGraph, v: int) -> int:
  return sum(slab_list.live_count() for slab_list in g.vertex_lists(v))


def edge_count(g: DynamicGraph) -> int:
  return sum(slab_list.live_count() for slab_list in g.lists)


def snapshot_adjacency(g: DynamicGraph) -> list:
  """Per-vertex neighbour sets, or neighbour -> weight maps when weighted."""
  if g.weighted:
    return [
      {
        key: weight
        for slab_list in g.vertex_lists(v)
        for key, weight in slab_list.entries()
      }
      for v in range(g.vertex_n)
    ]
  return [
    {key for slab_list in g.vertex_lists(v) for key, _ in slab_list.entries()}
    for v in range(g.vertex_n)
  ]


def graph_from_batch(
  batch: EdgeBatch, like: DynamicGraph, *, update_tracking: bool = False
) -> DynamicGraph:
  """Builds a graph holding only `batch`, shaped like `like`."""
  edges = batch.oriented()
  g = graph_new(
    like.vertex_n,
    edges.out_degree_hints(like.vertex_n),
    like.load_factor,
    weighted=like.weighted,
    hashing_enabled=like.hashing_enabled,
    update_tracking=update_tracking,
    width=like.width,
    hash_params=like.hash_params,
    workers=like.workers,
  )
  insert_edges(g, edges)
  return g
