"""Seeded base/batch splits for dynamic experiments.

Incremental runs hold back `batches * batch_size` shuffled edges and insert
them back batch by batch, so every intermediate graph is a subgraph of the
real input. Decremental runs start from the whole graph and delete disjoint
shuffled batches.
"""

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from meerkat.exceptions import InsufficientEdgesError
from meerkat.graph_core import EdgeBatch

from .edge_list import EdgeList

SplitMode = Literal["static", "incremental", "decremental"]

SYNTHETIC_WEIGHT_RANGE = (1, 64)


@dataclass
class BatchSplit:
  base: EdgeBatch
  batches: list[EdgeBatch]


def edge_units(el: EdgeList, symmetric: bool) -> EdgeBatch:
  """The edges a split draws from.

  Symmetric runs treat (u, v) and (v, u) as one undirected edge, stored as
  (min, max); the resulting batches are undirected.
  """
  edges = el.edges
  if not symmetric:
    return edges
  low = np.minimum(edges.src, edges.dst)
  high = np.maximum(edges.src, edges.dst)
  canonical = EdgeBatch(low, high, edges.weights).oriented()
  return EdgeBatch(
    canonical.src, canonical.dst, canonical.weights, directed=False
  )


def _take(units: EdgeBatch, index: np.ndarray) -> EdgeBatch:
  return EdgeBatch(
    units.src[index],
    units.dst[index],
    None if units.weights is None else units.weights[index],
    directed=units.directed,
  )


def split_batches(
  el: EdgeList,
  base_fraction: float,
  batch_size: int,
  batches: int,
  seed: int,
  *,
  mode: SplitMode = "incremental",
  symmetric: bool = False,
) -> BatchSplit:
  units = edge_units(el, symmetric)
  m = len(units)
  order = np.random.default_rng(seed).permutation(m)
  held = batch_size * batches
  if mode == "static":
    return BatchSplit(base=units, batches=[])

  if mode == "incremental":
    base_n = int(np.floor(base_fraction * m))
    if base_n + held > m:
      raise InsufficientEdgesError(
        f"A base of {base_n} edges plus {batches} batches of {batch_size} "
        f"needs {base_n + held} edges; the graph has {m}."
      )
    base = _take(units, np.sort(order[:base_n]))
    pool = order[base_n : base_n + held]
  else:
    if held > m:
      raise InsufficientEdgesError(
        f"{batches} batches of {batch_size} need {held} edges; "
        f"the graph has {m}."
      )
    base = units
    pool = order[:held]

  logging.info(
    "split: %d base edges, %d batches of %d (%s)",
    len(base),
    batches,
    batch_size,
    mode,
  )
  return BatchSplit(
    base=base,
    batches=[
      _take(units, pool[k * batch_size : (k + 1) * batch_size])
      for k in range(batches)
    ],
  )


def with_synthetic_weights(edges: EdgeBatch, seed: int) -> EdgeBatch:
  """Draws weights uniformly from SYNTHETIC_WEIGHT_RANGE under `seed`."""
  low, high = SYNTHETIC_WEIGHT_RANGE
  weights = np.random.default_rng(seed).integers(low, high + 1, size=len(edges))
  return EdgeBatch(edges.src, edges.dst, weights, directed=edges.directed)


def without_weights(edges: EdgeBatch) -> EdgeBatch:
  return EdgeBatch(edges.src, edges.dst, None, directed=edges.directed)
