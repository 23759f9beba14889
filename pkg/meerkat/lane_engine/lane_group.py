"""Lane-group primitives.

A lane group of width W holds one value per lane in a numpy vector. Every
primitive takes the whole vector, so all lanes always participate.
"""

from dataclasses import dataclass, field

import numpy as np

from meerkat.exceptions import LaneOutOfRangeError

from .frontier import Frontier


@dataclass
class LaneGroup:
  width: int
  lane_ids: np.ndarray = field(init=False, repr=False)

  def __post_init__(self):
    if self.width < 1:
      raise LaneOutOfRangeError(f"Group width must be >= 1, got {self.width}")
    self.lane_ids = np.arange(self.width)

  def flags(self, active: int | None = None) -> np.ndarray:
    """Per-lane work flags with the first `active` lanes set."""
    flags = np.zeros(self.width, dtype=np.bool_)
    flags[: self.width if active is None else active] = True
    return flags


def group_ballot(predicate: np.ndarray) -> int:
  mask = 0
  for lane in np.flatnonzero(predicate).tolist():
    mask |= 1 << lane
  return mask


def group_popcount(mask: int) -> int:
  return bin(mask).count("1")


def group_ffs(mask: int) -> int:
  """Lowest set lane of a ballot mask, or -1."""
  if mask == 0:
    return -1
  return (mask & -mask).bit_length() - 1


def group_dequeue(flags: np.ndarray) -> int:
  """Elects the lowest lane with outstanding work and clears its flag."""
  lane = group_ffs(group_ballot(flags))
  if lane >= 0:
    flags[lane] = False
  return lane


def group_broadcast(values: np.ndarray, src_lane: int) -> np.ndarray:
  if not 0 <= src_lane < len(values):
    raise LaneOutOfRangeError(
      f"Source lane {src_lane} is outside a group of width {len(values)}."
    )
  return np.full_like(values, values[src_lane])


def group_reduce_sum(values: np.ndarray):
  """Pairwise tree sum: lane k adds lane k + 1, k + 2, ... level by level.

  The order is fixed, so float results are reproducible for a given width.
  """
  acc = np.asarray(values)
  if acc.size == 0:
    return 0
  while acc.size > 1:
    if acc.size % 2:
      acc = np.append(acc, acc.dtype.type(0))
    acc = acc[0::2] + acc[1::2]
  return acc[0].item()


def group_reduce_min(values: np.ndarray):
  acc = np.asarray(values)
  while acc.size > 1:
    if acc.size % 2:
      acc = np.append(acc, acc[-1])
    acc = np.minimum(acc[0::2], acc[1::2])
  return acc[0].item()


def group_enqueue_frontier(
  frontier: Frontier, values: np.ndarray, to_enqueue: np.ndarray
) -> None:
  """Appends the flagged lanes' values, in lane order, with one frontier commit."""
  mask = np.asarray(to_enqueue, dtype=np.bool_)
  if not mask.any():
    return
  frontier.commit(np.asarray(values)[mask])
