"""Brute-force references for the graph algorithms.

Only the standard library and numpy are used here, never the slab store, so
the algorithms are checked against code that shares none of their paths.
"""

import heapq
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

INF = 2**32 - 1


@dataclass
class PlainGraph:
  """Per-vertex neighbour -> weight maps (weight 1 for unweighted edges)."""

  adjacency: list[dict[int, int]]
  weighted: bool = False

  @property
  def vertex_n(self) -> int:
    return len(self.adjacency)

  @classmethod
  def from_edges(
    cls,
    vertex_n: int,
    edges: Iterable[tuple[int, int]],
    weights: Iterable[int] | None = None,
  ) -> "PlainGraph":
    adjacency: list[dict[int, int]] = [{} for _ in range(vertex_n)]
    edges = list(edges)
    weight_list = [1] * len(edges) if weights is None else list(weights)
    for (u, v), w in zip(edges, weight_list):
      adjacency[u][v] = w
    return cls(adjacency, weighted=weights is not None)

  @classmethod
  def from_snapshot(cls, snapshot: list) -> "PlainGraph":
    """Accepts the set/map adjacency exported by a dynamic graph."""
    if snapshot and isinstance(snapshot[0], dict):
      return cls([dict(m) for m in snapshot], weighted=True)
    return cls([{v: 1 for v in s} for s in snapshot])

  def reversed(self) -> "PlainGraph":
    adjacency: list[dict[int, int]] = [{} for _ in range(self.vertex_n)]
    for u, neighbors in enumerate(self.adjacency):
      for v, w in neighbors.items():
        adjacency[v][u] = w
    return PlainGraph(adjacency, self.weighted)


def oracle_dijkstra(pg: PlainGraph, src: int) -> np.ndarray:
  dist = [INF] * pg.vertex_n
  dist[src] = 0
  heap = [(0, src)]
  while heap:
    d, u = heapq.heappop(heap)
    if d > dist[u]:
      continue
    for v, w in pg.adjacency[u].items():
      if d + w < dist[v]:
        dist[v] = d + w
        heapq.heappush(heap, (d + w, v))
  return np.asarray(dist, dtype=np.uint64)


def oracle_bfs(pg: PlainGraph, src: int) -> np.ndarray:
  level = [INF] * pg.vertex_n
  level[src] = 0
  queue = deque([src])
  while queue:
    u = queue.popleft()
    for v in pg.adjacency[u]:
      if level[v] == INF:
        level[v] = level[u] + 1
        queue.append(v)
  return np.asarray(level, dtype=np.uint64)


def oracle_pagerank(
  pg: PlainGraph, d: float = 0.85, eps: float = 1e-5, max_iter: int = 100
) -> np.ndarray:
  """Dense power iteration over the out-edge graph `pg`."""
  n = pg.vertex_n
  out = np.array([len(a) for a in pg.adjacency], dtype=np.float64)
  transition = np.zeros((n, n))
  for u, neighbors in enumerate(pg.adjacency):
    for v in neighbors:
      transition[v, u] += 1.0 / out[u]
  dangling = out == 0
  pr = np.full(n, 1.0 / n)
  for _ in range(max_iter):
    pr_new = (1 - d) / n + d * (transition @ pr)
    if dangling.any():
      pr_new += d * pr[dangling].sum() / n
    delta = np.abs(pr_new - pr).sum()
    pr = pr_new
    if delta <= eps:
      break
  return pr


def _undirected(pg: PlainGraph) -> list[set[int]]:
  neighbors = [set() for _ in range(pg.vertex_n)]
  for u, adj in enumerate(pg.adjacency):
    for v in adj:
      if u != v:
        neighbors[u].add(v)
        neighbors[v].add(u)
  return neighbors


def oracle_triangles(pg: PlainGraph) -> int:
  """Counts each triangle once, via sorted higher-neighbour intersections."""
  higher = [sorted(v for v in adj if v > u) for u, adj in enumerate(_undirected(pg))]
  count = 0
  for u in range(pg.vertex_n):
    for v in higher[u]:
      a, b = higher[u], higher[v]
      i = j = 0
      while i < len(a) and j < len(b):
        if a[i] == b[j]:
          count += 1
          i += 1
          j += 1
        elif a[i] < b[j]:
          i += 1
        else:
          j += 1
  return count


def oracle_wcc(pg: PlainGraph) -> np.ndarray:
  """Component-minimum label per vertex, by iterative DFS."""
  neighbors = _undirected(pg)
  labels = np.full(pg.vertex_n, -1, dtype=np.int64)
  for root in range(pg.vertex_n):
    if labels[root] >= 0:
      continue
    labels[root] = root
    stack = [root]
    while stack:
      u = stack.pop()
      for v in neighbors[u]:
        if labels[v] < 0:
          labels[v] = root
          stack.append(v)
  return labels


def partition(labels: "np.ndarray | list[int]") -> set[frozenset[int]]:
  groups: dict[int, set[int]] = {}
  for v, label in enumerate(np.asarray(labels).tolist()):
    groups.setdefault(label, set()).add(v)
  return {frozenset(g) for g in groups.values()}
