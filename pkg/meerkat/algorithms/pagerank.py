"""PageRank by power iteration over an in-edge graph.

Each super-step computes every vertex's contribution pr/out, sums the
contributions of each vertex's in-neighbours slab by slab, and adds the
teleport term plus the mass of zero-out-degree vertices spread evenly.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from meerkat.exceptions import (
  BadDampingError,
  BadEpsilonError,
  MeerkatDeveloperException,
)
from meerkat.graph_core import DynamicGraph, EdgeBatch
from meerkat.lane_engine import (
  AtomicArray,
  expand_bucket_pairs,
  group_reduce_sum,
  scheme2_for_each_slab,
)


@dataclass
class PageRankState:
  pr: np.ndarray
  d: float = 0.85
  eps: float = 1e-5
  max_iter: int = 100
  contribution: np.ndarray = field(default_factory=lambda: np.empty(0))
  iterations: int = 0
  delta: float = float("inf")

  @property
  def n(self) -> int:
    return int(self.pr.size)


def pagerank_init(
  vertex_n: int, d: float = 0.85, eps: float = 1e-5, max_iter: int = 100
) -> PageRankState:
  return PageRankState(
    pr=np.full(vertex_n, 1.0 / vertex_n), d=d, eps=eps, max_iter=max_iter
  )


def _check_parameters(state: PageRankState) -> None:
  if not 0 < state.d < 1:
    raise BadDampingError(f"Damping must be in (0, 1). Received: {state.d}")
  if not state.eps > 0:
    raise BadEpsilonError(f"Epsilon must be positive. Received: {state.eps}")
  if state.max_iter < 1:
    raise MeerkatDeveloperException(
      f"max_iter must be at least 1. Received: {state.max_iter}"
    )


def out_degrees(g_in: DynamicGraph) -> np.ndarray:
  """Out-degree of every vertex, found by sweeping the in-edge lists."""
  out = AtomicArray(np.zeros(g_in.vertex_n, dtype=np.int64))

  def count(v: int, neighbors: np.ndarray, weights: np.ndarray | None) -> None:
    out.add_many(neighbors, np.ones(neighbors.size, dtype=np.int64))

  pairs = expand_bucket_pairs(g_in, np.arange(g_in.vertex_n))
  scheme2_for_each_slab(g_in, *pairs, count)
  return out.values


def _accumulate(
  contribution: np.ndarray,
  incoming: AtomicArray,
  v: int,
  neighbors: np.ndarray,
  weights: np.ndarray | None,
) -> None:
  incoming.add_many(
    np.array([v]), np.array([group_reduce_sum(contribution[neighbors])])
  )


def pagerank(g_in: DynamicGraph, state: PageRankState) -> PageRankState:
  """Iterates from `state.pr` until the L1 change is at most eps.

  Stops early at `max_iter` super-steps. Returns a new state; the iteration
  count of this run is in `iterations`.
  """
  _check_parameters(state)
  n, d = g_in.vertex_n, state.d
  if state.n != n:
    raise MeerkatDeveloperException(
      f"PageRank state has {state.n} vertices; the graph has {n}."
    )
  out = out_degrees(g_in)
  has_out = out > 0
  dangling = ~has_out
  pairs = expand_bucket_pairs(g_in, np.arange(n))
  pr = state.pr.astype(np.float64, copy=True)
  contribution = np.zeros(n)
  delta = float("inf")
  iterations = 0
  while iterations < state.max_iter:
    contribution = np.zeros(n)
    contribution[has_out] = pr[has_out] / out[has_out]
    incoming = AtomicArray(np.zeros(n))
    scheme2_for_each_slab(
      g_in, *pairs, functools.partial(_accumulate, contribution, incoming)
    )
    pr_new = (1 - d) / n + d * incoming.values
    if dangling.any():
      pr_new += d * pr[dangling].sum() / n
    delta = float(np.abs(pr_new - pr).sum())
    pr = pr_new
    iterations += 1
    if delta <= state.eps:
      break
  logging.info("pagerank: %d iterations, L1 delta %.3g", iterations, delta)
  return PageRankState(
    pr=pr,
    d=d,
    eps=state.eps,
    max_iter=state.max_iter,
    contribution=contribution,
    iterations=iterations,
    delta=delta,
  )


def pagerank_dynamic(
  g_in: DynamicGraph,
  state: PageRankState,
  batch: EdgeBatch,
  mode: Literal["incremental", "decremental"],
) -> PageRankState:
  """Re-converges after `batch` was applied to `g_in`, warm-started."""
  if mode not in ("incremental", "decremental"):
    raise MeerkatDeveloperException(f"Unknown update mode: {mode}")
  logging.debug("pagerank_dynamic: %s batch of %d edges", mode, len(batch))
  return pagerank(g_in, state)
