"""Seeded random graphs shared by the test suites."""

import numpy as np

from meerkat.graph_core import (
  DynamicGraph,
  EdgeBatch,
  graph_new,
  insert_edges,
)


def random_edges(
  vertex_n: int,
  edge_n: int,
  seed: int = 0,
  *,
  weighted: bool = False,
  max_weight: int = 20,
  self_loops: bool = False,
) -> EdgeBatch:
  """Distinct directed edges drawn uniformly, like a G(n, m) sample."""
  rng = np.random.default_rng(seed)
  pairs: dict[tuple[int, int], int] = {}
  limit = vertex_n * vertex_n if self_loops else vertex_n * (vertex_n - 1)
  while len(pairs) < min(edge_n, limit):
    u, v = (int(x) for x in rng.integers(0, vertex_n, size=2))
    if u == v and not self_loops:
      continue
    pairs.setdefault((u, v), int(rng.integers(1, max_weight + 1)))
  return EdgeBatch.from_pairs(
    list(pairs), list(pairs.values()) if weighted else None
  )


def random_undirected_edges(
  vertex_n: int, edge_n: int, seed: int = 0
) -> EdgeBatch:
  """Distinct undirected edges (u < v), materialized in both orientations."""
  rng = np.random.default_rng(seed)
  pairs: set[tuple[int, int]] = set()
  while len(pairs) < min(edge_n, vertex_n * (vertex_n - 1) // 2):
    u, v = (int(x) for x in rng.integers(0, vertex_n, size=2))
    if u != v:
      pairs.add((min(u, v), max(u, v)))
  return EdgeBatch.from_pairs(sorted(pairs), directed=False).oriented()


def build_graph(
  vertex_n: int,
  batch: EdgeBatch,
  *,
  width: int = 32,
  lf: float = 0.6,
  update_tracking: bool = False,
  hashing_enabled: bool = True,
  workers: int = 1,
) -> DynamicGraph:
  oriented = batch.oriented()
  g = graph_new(
    vertex_n,
    oriented.out_degree_hints(vertex_n),
    lf,
    weighted=batch.weighted,
    hashing_enabled=hashing_enabled,
    update_tracking=update_tracking,
    width=width,
    workers=workers,
  )
  insert_edges(g, oriented)
  return g


def adjacency_of(vertex_n: int, batch: EdgeBatch) -> list:
  oriented = batch.oriented()
  if oriented.weights is not None:
    maps: list[dict[int, int]] = [{} for _ in range(vertex_n)]
    for (u, v), w in zip(oriented.pairs(), oriented.weights.tolist()):
      maps[u][v] = w
    return maps
  sets: list[set[int]] = [set() for _ in range(vertex_n)]
  for u, v in oriented.pairs():
    sets[u].add(v)
  return sets
