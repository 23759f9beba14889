import threading

import numpy as np


class AtomicArray:
  """A numpy array whose read-modify-write operations are atomic.

  Scalar operations return the previous value, like their device
  counterparts. The `*_many` forms apply a whole lane group at once.
  """

  def __init__(self, values: np.ndarray):
    self.values = values
    self._lock = threading.Lock()

  def __len__(self) -> int:
    return len(self.values)

  def fetch_min(self, index: int, value):
    with self._lock:
      old = self.values[index].item()
      if value < old:
        self.values[index] = value
      return old

  def fetch_add(self, index: int, value):
    with self._lock:
      old = self.values[index].item()
      self.values[index] = old + value
      return old

  def compare_and_swap(self, index: int, expected, value):
    with self._lock:
      old = self.values[index].item()
      if old == expected:
        self.values[index] = value
      return old

  def min_many(self, indices: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Atomic min for a group of lanes; returns the indices that decreased."""
    if len(indices) == 0:
      return np.empty(0, dtype=np.int64)
    with self._lock:
      before = self.values[indices].copy()
      np.minimum.at(self.values, indices, values)
      changed = indices[self.values[indices] < before]
    return np.unique(changed)

  def fill(self, indices: np.ndarray, value) -> None:
    with self._lock:
      self.values[indices] = value

  def add_many(self, indices: np.ndarray, values: np.ndarray) -> None:
    with self._lock:
      np.add.at(self.values, indices, values)
