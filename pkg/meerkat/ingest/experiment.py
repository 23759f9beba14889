"""Batch-dynamic experiment loop with static verification after every batch."""

import dataclasses
import hashlib
import logging
import time

import numpy as np

from meerkat.dataclass_utils import diff_results
from meerkat.exceptions import ConfigError, VerificationFailedError
from meerkat.warn import warn

from .batches import split_batches, with_synthetic_weights, without_weights
from .edge_list import EdgeList
from .experiment_config import ExperimentConfig
from .report import Report, ReportRow, speedup
from .runners import CreateRunnerFromConfig, RunResult

# PageRank results are compared within this many multiples of eps (L1).
PAGERANK_TOLERANCE_FACTOR = 10
PAGERANK_CHECKSUM_DECIMALS = 6


def result_checksum(values: np.ndarray, decimals: int | None = None) -> str:
  """sha256 over the result vector; floats are rounded first if asked."""
  values = np.ascontiguousarray(values)
  if decimals is not None:
    values = np.round(values.astype(np.float64), decimals) + 0.0
  return hashlib.sha256(values.tobytes()).hexdigest()


def _checksum(cfg: ExperimentConfig, result: RunResult) -> str:
  decimals = PAGERANK_CHECKSUM_DECIMALS if cfg.algorithm == "pr" else None
  return result_checksum(result.values, decimals)


def corrupt_result(result: RunResult) -> RunResult:
  """Returns a copy of `result` with its first entry changed."""
  values = result.values.copy()
  if values.size:
    if np.issubdtype(values.dtype, np.floating):
      values[0] += 1.0
    else:
      values[0] ^= values.dtype.type(1)
  return RunResult(values, result.iterations)


def verify(
  cfg: ExperimentConfig, static: RunResult, dynamic: RunResult, batch_idx: int
) -> None:
  if cfg.algorithm == "pr":
    l1 = float(np.abs(static.values - dynamic.values).sum())
    if l1 > PAGERANK_TOLERANCE_FACTOR * cfg.eps:
      raise VerificationFailedError(
        f"PageRank after batch {batch_idx} is {l1:.3g} (L1) away from the "
        "static result.",
        batch_idx,
      )
    return
  differences = diff_results(static.values, dynamic.values)
  if differences:
    raise VerificationFailedError(
      f"{cfg.algorithm} after batch {batch_idx} differs from the static "
      f"result: {differences}",
      batch_idx,
    )


def prepare_edges(cfg: ExperimentConfig, el: EdgeList) -> EdgeList:
  """Fits the edge weights to the algorithm."""
  if cfg.algorithm == "sssp" and not el.weighted:
    warn("The input is unweighted; SSSP uses random weights in [1, 64].")
    return dataclasses.replace(el, edges=with_synthetic_weights(el.edges, cfg.seed))
  if cfg.algorithm != "sssp" and el.weighted:
    if cfg.algorithm == "bfs":
      warn("BFS ignores the edge weights of the input.")
    return dataclasses.replace(el, edges=without_weights(el.edges))
  return el


def run_experiment(cfg: ExperimentConfig, el: EdgeList) -> Report:
  """Builds the base graph, then times dynamic vs static per batch."""
  if cfg.algorithm in ("bfs", "sssp") and cfg.src >= el.vertex_n:
    raise ConfigError(
      f"Source vertex {cfg.src} is out of range; the graph has "
      f"{el.vertex_n} vertices."
    )
  el = prepare_edges(cfg, el)
  split = split_batches(
    el,
    cfg.base_fraction if cfg.mode == "incremental" else 1.0,
    cfg.batch_size,
    cfg.effective_batches,
    cfg.seed,
    mode=cfg.mode,
    symmetric=cfg.symmetric,
  )
  if cfg.inject_fault and not split.batches:
    warn("Fault injection needs at least one batch; nothing was corrupted.")

  runner = CreateRunnerFromConfig(cfg, el.vertex_n)
  start = time.perf_counter()
  baseline = runner.build(split.base)
  report = Report(
    algorithm=cfg.algorithm,
    mode=cfg.mode,
    vertex_n=el.vertex_n,
    edge_n=len(el),
    batch_size=cfg.batch_size,
    seed=cfg.seed,
    baseline_ms=(time.perf_counter() - start) * 1000,
    baseline_checksum=_checksum(cfg, baseline),
    baseline_iterations=baseline.iterations,
  )

  cum_dynamic = cum_static = 0.0
  for batch_idx, batch in enumerate(split.batches):
    runner.mutate(batch)
    start = time.perf_counter()
    dynamic = runner.dynamic(batch)
    t_dynamic = (time.perf_counter() - start) * 1000
    start = time.perf_counter()
    static = runner.static()
    t_static = (time.perf_counter() - start) * 1000

    if cfg.inject_fault and batch_idx == 0:
      dynamic = corrupt_result(dynamic)
    verify(cfg, static, dynamic, batch_idx)

    cum_dynamic += t_dynamic
    cum_static += t_static
    report.rows.append(
      ReportRow(
        batch_idx=batch_idx,
        t_dynamic_ms=t_dynamic,
        t_static_ms=t_static,
        cum_dynamic=cum_dynamic,
        cum_static=cum_static,
        s=speedup(cum_static, cum_dynamic),
        checksum=_checksum(cfg, static),
        iterations_dynamic=dynamic.iterations,
        iterations_static=static.iterations,
      )
    )
    logging.info(
      "batch %d: dynamic %.2f ms, static %.2f ms, s=%.2f",
      batch_idx,
      t_dynamic,
      t_static,
      report.rows[-1].s,
    )
  return report
