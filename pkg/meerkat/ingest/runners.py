"""Per-algorithm drivers used by the experiment loop.

A runner owns the graph(s) and the dynamic state of one algorithm. Each batch
goes through `mutate` (graph update, not timed), `dynamic` (the batch-dynamic
algorithm) and `static` (recomputation from scratch on the same graph).
"""

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from meerkat.algorithms import (
  PageRankState,
  SsspTree,
  WccState,
  bfs_decremental,
  bfs_incremental,
  bfs_static,
  pagerank,
  pagerank_dynamic,
  pagerank_init,
  sssp_decremental,
  sssp_incremental,
  sssp_static,
  tc_decremental,
  tc_incremental,
  tc_static,
  wcc_incremental,
  wcc_init,
  wcc_static,
)
from meerkat.exceptions import MeerkatDeveloperException
from meerkat.graph_core import (
  DynamicGraph,
  EdgeBatch,
  delete_edges,
  graph_from_batch,
  graph_new,
  insert_edges,
  seal_updates,
)

from .experiment_config import ExperimentConfig


@dataclass
class RunResult:
  values: np.ndarray
  iterations: int | None = None


class AlgorithmRunner(Protocol):
  """Interface for the algorithm drivers."""

  def build(self, base: EdgeBatch) -> RunResult:
    """Builds the graph from `base` and returns the static baseline."""
    raise NotImplementedError()

  def mutate(self, batch: EdgeBatch) -> None:
    """Applies the batch to the stored graph(s)."""
    raise NotImplementedError()

  def dynamic(self, batch: EdgeBatch) -> RunResult:
    """Updates the dynamic result for a batch that `mutate` applied."""
    raise NotImplementedError()

  def static(self) -> RunResult:
    """Recomputes the result from scratch on the current graph."""
    raise NotImplementedError()


def _build_graph(
  cfg: ExperimentConfig,
  vertex_n: int,
  edges: EdgeBatch,
  *,
  weighted: bool,
  update_tracking: bool = False,
) -> DynamicGraph:
  oriented = edges.oriented()
  g = graph_new(
    vertex_n,
    oriented.out_degree_hints(vertex_n),
    cfg.lf,
    weighted=weighted,
    hashing_enabled=cfg.hashing_enabled,
    update_tracking=update_tracking,
    width=cfg.group_width,
    workers=cfg.workers,
  )
  insert_edges(g, oriented)
  return g


class _MutatingRunner:
  """Shared insert/delete handling for runners that keep one graph."""

  cfg: ExperimentConfig
  g: DynamicGraph

  def _apply(self, g: DynamicGraph, batch: EdgeBatch) -> None:
    if self.cfg.mode == "decremental":
      delete_edges(g, batch)
    else:
      insert_edges(g, batch)

  def mutate(self, batch: EdgeBatch) -> None:
    self._apply(self.g, batch)


class TreeRunner(_MutatingRunner, AlgorithmRunner):
  """SSSP (weighted) or BFS (unweighted) dependence trees from `cfg.src`."""

  def __init__(self, cfg: ExperimentConfig, vertex_n: int):
    self.cfg = cfg
    self.vertex_n = vertex_n
    self.weighted = cfg.algorithm == "sssp"
    self.tree: SsspTree | None = None

  def _static_tree(self) -> SsspTree:
    if self.weighted:
      return sssp_static(self.g, self.cfg.src)
    return bfs_static(self.g, self.cfg.src)

  def build(self, base: EdgeBatch) -> RunResult:
    self.g = _build_graph(self.cfg, self.vertex_n, base, weighted=self.weighted)
    self.tree = self._static_tree()
    return RunResult(self.tree.nodes.values.copy())

  def dynamic(self, batch: EdgeBatch) -> RunResult:
    assert self.tree is not None
    incremental = self.cfg.mode == "incremental"
    if self.weighted:
      update = sssp_incremental if incremental else sssp_decremental
    else:
      update = bfs_incremental if incremental else bfs_decremental
    update(self.g, self.tree, batch)
    return RunResult(self.tree.nodes.values.copy())

  def static(self) -> RunResult:
    return RunResult(self._static_tree().nodes.values.copy())


class PageRankRunner(_MutatingRunner, AlgorithmRunner):
  """PageRank over the in-edge graph (edge u -> v stored as v -> u)."""

  def __init__(self, cfg: ExperimentConfig, vertex_n: int):
    self.cfg = cfg
    self.vertex_n = vertex_n
    self.state: PageRankState | None = None

  def _cold(self) -> PageRankState:
    return pagerank_init(
      self.vertex_n, self.cfg.damping, self.cfg.eps, self.cfg.max_iter
    )

  def build(self, base: EdgeBatch) -> RunResult:
    self.g = _build_graph(
      self.cfg, self.vertex_n, base.reversed(), weighted=False
    )
    self.state = pagerank(self.g, self._cold())
    return RunResult(self.state.pr.copy(), self.state.iterations)

  def mutate(self, batch: EdgeBatch) -> None:
    self._apply(self.g, batch.reversed())

  def dynamic(self, batch: EdgeBatch) -> RunResult:
    assert self.state is not None
    mode = "decremental" if self.cfg.mode == "decremental" else "incremental"
    self.state = pagerank_dynamic(self.g, self.state, batch, mode)
    return RunResult(self.state.pr.copy(), self.state.iterations)

  def static(self) -> RunResult:
    state = pagerank(self.g, self._cold())
    return RunResult(state.pr.copy(), state.iterations)


class TriangleRunner(_MutatingRunner, AlgorithmRunner):
  """Running triangle count, updated from the batch-only update graph."""

  def __init__(self, cfg: ExperimentConfig, vertex_n: int):
    self.cfg = cfg
    self.vertex_n = vertex_n
    self.count = 0

  def build(self, base: EdgeBatch) -> RunResult:
    self.g = _build_graph(self.cfg, self.vertex_n, base, weighted=False)
    self.count = tc_static(self.g)
    return RunResult(np.array([self.count], dtype=np.int64))

  def dynamic(self, batch: EdgeBatch) -> RunResult:
    g_update = graph_from_batch(batch, self.g)
    if self.cfg.mode == "decremental":
      self.count -= tc_decremental(self.g, g_update, batch).delta
    else:
      self.count += tc_incremental(self.g, g_update, batch).delta
    return RunResult(np.array([self.count], dtype=np.int64))

  def static(self) -> RunResult:
    return RunResult(np.array([tc_static(self.g)], dtype=np.int64))


class WccRunner(AlgorithmRunner):
  """Incremental connected components; the update inserts its own batch."""

  def __init__(self, cfg: ExperimentConfig, vertex_n: int):
    self.cfg = cfg
    self.vertex_n = vertex_n
    self.state: WccState | None = None

  def build(self, base: EdgeBatch) -> RunResult:
    self.g = _build_graph(
      self.cfg, self.vertex_n, base, weighted=False, update_tracking=True
    )
    seal_updates(self.g)
    self.state = wcc_init(self.g)
    return RunResult(self.state.labels())

  def mutate(self, batch: EdgeBatch) -> None:
    pass

  def dynamic(self, batch: EdgeBatch) -> RunResult:
    assert self.state is not None
    return RunResult(wcc_incremental(self.g, self.state, batch))

  def static(self) -> RunResult:
    return RunResult(wcc_static(self.g))


def CreateRunnerFromConfig(cfg: ExperimentConfig, vertex_n: int) -> AlgorithmRunner:
  if cfg.algorithm in ("sssp", "bfs"):
    return TreeRunner(cfg, vertex_n)
  if cfg.algorithm == "pr":
    return PageRankRunner(cfg, vertex_n)
  if cfg.algorithm == "tc":
    return TriangleRunner(cfg, vertex_n)
  if cfg.algorithm == "wcc":
    return WccRunner(cfg, vertex_n)
  raise MeerkatDeveloperException(f"Unhandled algorithm: {cfg.algorithm}")
