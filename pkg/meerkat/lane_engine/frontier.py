import logging
import threading

import numpy as np

from meerkat.exceptions import CapacityOverflowError


class Frontier:
  """Growable append-only work list with an atomically advanced size."""

  def __init__(
    self,
    dtype: "np.dtype | type" = np.int64,
    capacity: int = 1024,
    *,
    max_capacity: int | None = None,
  ):
    self._items = np.empty(max(1, capacity), dtype=dtype)
    self._size = 0
    self._max_capacity = max_capacity
    self._lock = threading.Lock()

  @property
  def size(self) -> int:
    return self._size

  def __len__(self) -> int:
    return self._size

  @property
  def items(self) -> np.ndarray:
    return self._items[: self._size]

  def commit(self, values: np.ndarray) -> int:
    """Reserves len(values) slots, writes them and returns the base slot."""
    count = len(values)
    with self._lock:
      base = self._size
      needed = base + count
      if self._max_capacity is not None and needed > self._max_capacity:
        raise CapacityOverflowError(
          f"Frontier holds at most {self._max_capacity} items; "
          f"{needed} requested."
        )
      if needed > len(self._items):
        grown = max(needed, 2 * len(self._items))
        if self._max_capacity is not None:
          grown = min(grown, self._max_capacity)
        items = np.empty(grown, dtype=self._items.dtype)
        items[:base] = self._items[:base]
        self._items = items
        logging.debug("frontier grew to %d slots", grown)
      self._items[base:needed] = values
      self._size = needed
      return base
