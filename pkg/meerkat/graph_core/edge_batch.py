"""Edge batches: parallel src/dst (and optional weight) arrays."""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from meerkat.exceptions import MeerkatDeveloperException


@dataclass
class EdgeBatch:
  src: np.ndarray
  dst: np.ndarray
  weights: np.ndarray | None = None
  directed: bool = True

  def __post_init__(self):
    self.src = np.asarray(self.src, dtype=np.int64).reshape(-1)
    self.dst = np.asarray(self.dst, dtype=np.int64).reshape(-1)
    if self.weights is not None:
      self.weights = np.asarray(self.weights, dtype=np.int64).reshape(-1)
    if self.src.shape != self.dst.shape or (
      self.weights is not None and self.weights.shape != self.src.shape
    ):
      raise MeerkatDeveloperException(
        "Edge batch arrays must have equal lengths. Received: "
        f"src={self.src.size}, dst={self.dst.size}, "
        f"weights={None if self.weights is None else self.weights.size}"
      )

  @classmethod
  def from_pairs(
    cls,
    pairs: Iterable[tuple[int, int]],
    weights: Iterable[int] | None = None,
    *,
    directed: bool = True,
  ) -> "EdgeBatch":
    edges = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
    return cls(
      src=edges[:, 0],
      dst=edges[:, 1],
      weights=None if weights is None else np.asarray(list(weights)),
      directed=directed,
    )

  @classmethod
  def empty(cls, *, weighted: bool = False, directed: bool = True) -> "EdgeBatch":
    return cls(
      src=np.empty(0, dtype=np.int64),
      dst=np.empty(0, dtype=np.int64),
      weights=np.empty(0, dtype=np.int64) if weighted else None,
      directed=directed,
    )

  def __len__(self) -> int:
    return int(self.src.size)

  @property
  def weighted(self) -> bool:
    return self.weights is not None

  def pairs(self) -> list[tuple[int, int]]:
    return list(zip(self.src.tolist(), self.dst.tolist()))

  def oriented(self) -> "EdgeBatch":
    """Returns the directed, duplicate-free batch that is actually applied.

    Undirected batches contribute both orientations. When a directed edge
    occurs more than once, its last occurrence (and weight) wins.
    """
    src, dst, weights = self.src, self.dst, self.weights
    if not self.directed:
      src, dst = np.concatenate([src, dst]), np.concatenate([dst, src])
      if weights is not None:
        weights = np.concatenate([weights, weights])
    if src.size == 0:
      return EdgeBatch(src, dst, weights, directed=True)
    keys = (src << 32) | dst
    _, last_from_end = np.unique(keys[::-1], return_index=True)
    keep = np.sort(keys.size - 1 - last_from_end)
    return EdgeBatch(
      src[keep],
      dst[keep],
      None if weights is None else weights[keep],
      directed=True,
    )

  def reversed(self) -> "EdgeBatch":
    return EdgeBatch(self.dst, self.src, self.weights, directed=self.directed)

  def out_degree_hints(self, vertex_n: int) -> np.ndarray:
    return np.bincount(self.src, minlength=vertex_n)
