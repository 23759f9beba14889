"""Slab memory layout, head arena, growth pool and slab-list operations.

A slab is a row of `width` 32-bit cells. The last cell links to the next slab
of the chain. Set slabs store one key per cell; map slabs store
<key, weight> pairs at even/odd lanes, leaving lane `width - 2` permanently
empty so that pairs stay aligned.
"""

import enum
import logging
import threading
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from meerkat.config import HANDLE_SPACE
from meerkat.exceptions import (
  CapacityOverflowError,
  MeerkatDeveloperException,
  MeerkatInternalException,
  SentinelKeyError,
)

from .constants import (
  A_INDEX_POINTER,
  CELL_DTYPE,
  DEFAULT_GROUP_WIDTH,
  EMPTY_KEY,
  INVALID_ADDRESS,
  INVALID_LANE,
  TOMBSTONE_KEY,
  is_sentinel_key,
)

# Pool slabs are carved out of fixed-size chunks so that a slab view stays
# valid while the pool grows.
_CHUNK_SLABS = 256


@dataclass(frozen=True)
class SlabLayout:
  width: int = DEFAULT_GROUP_WIDTH
  weighted: bool = False

  def __post_init__(self):
    if self.width < 4 or self.width % 2:
      raise MeerkatDeveloperException(
        f"Slab width must be an even number >= 4. Received: {self.width}"
      )

  @property
  def capacity(self) -> int:
    if self.weighted:
      return (self.width - 2) // 2
    return self.width - 1

  @property
  def next_lane(self) -> int:
    return self.width - 1

  @cached_property
  def key_lanes(self) -> np.ndarray:
    if self.weighted:
      return np.arange(0, 2 * self.capacity, 2)
    return np.arange(self.width - 1)


def reset_slab(slab: np.ndarray) -> None:
  slab[:-1] = EMPTY_KEY
  slab[-1] = INVALID_ADDRESS


@dataclass
class HeadArena:
  """All head slabs of a graph, in one allocation, indexed by offsets."""

  slabs: np.ndarray
  offsets: np.ndarray
  bucket_count: np.ndarray

  @property
  def total(self) -> int:
    return int(self.slabs.shape[0])

  def index(self, vertex: int, bucket: int) -> int:
    return int(self.offsets[vertex]) + bucket

  def head(self, vertex: int, bucket: int) -> np.ndarray:
    return self.slabs[self.index(vertex, bucket)]


def head_arena_build(
  bucket_count: "np.ndarray | list[int]",
  width: int = DEFAULT_GROUP_WIDTH,
  *,
  max_slabs: int = HANDLE_SPACE,
) -> HeadArena:
  counts = np.asarray(bucket_count, dtype=np.int64)
  if counts.ndim != 1 or counts.size == 0 or bool((counts < 1).any()):
    raise MeerkatDeveloperException(
      "Every vertex needs at least one slab list."
    )
  total = int(counts.sum())
  if total > max_slabs:
    raise CapacityOverflowError(
      f"Head arena needs {total} slabs; the handle space holds {max_slabs}."
    )
  offsets = np.zeros_like(counts)
  offsets[1:] = np.cumsum(counts)[:-1]
  slabs = np.full((total, width), EMPTY_KEY, dtype=CELL_DTYPE)
  slabs[:, -1] = INVALID_ADDRESS
  return HeadArena(slabs=slabs, offsets=offsets, bucket_count=counts)


class SlabPool:
  """Growth pool for chained (non-head) slabs, with a LIFO free list."""

  def __init__(self, width: int = DEFAULT_GROUP_WIDTH, *, max_slabs: int = HANDLE_SPACE):
    self._width = width
    self._max_slabs = max_slabs
    self._chunks: list[np.ndarray] = []
    self._free_list: list[int] = []
    self._free_set: set[int] = set()
    self._high_water = 0
    self._live = 0
    self._lock = threading.Lock()

  @property
  def high_water(self) -> int:
    return self._high_water

  @property
  def live(self) -> int:
    return self._live

  def alloc(self) -> int:
    with self._lock:
      if self._free_list:
        handle = self._free_list.pop()
        self._free_set.discard(handle)
      else:
        if self._high_water >= self._max_slabs:
          raise CapacityOverflowError(
            f"Slab pool exhausted after {self._max_slabs} slabs."
          )
        handle = self._high_water
        if handle // _CHUNK_SLABS == len(self._chunks):
          self._chunks.append(
            np.empty((_CHUNK_SLABS, self._width), dtype=CELL_DTYPE)
          )
          logging.debug("slab pool grew to %d chunks", len(self._chunks))
        self._high_water += 1
      self._live += 1
      reset_slab(self.slab(handle))
      return handle

  def free(self, handle: int) -> None:
    with self._lock:
      if handle >= self._high_water or handle in self._free_set:
        raise MeerkatDeveloperException(
          f"Tried to free slab {handle}, which is not allocated."
        )
      self._free_list.append(handle)
      self._free_set.add(handle)
      self._live -= 1

  def slab(self, handle: int) -> np.ndarray:
    return self._chunks[handle // _CHUNK_SLABS][handle % _CHUNK_SLABS]


def slab_alloc(pool: SlabPool) -> int:
  return pool.alloc()


class InsertOutcome(enum.Enum):
  INSERTED = "inserted"
  ALREADY_PRESENT = "already_present"
  UPDATED = "updated"


class SlabList:
  """One bucket: a head slab plus its chain of pool slabs.

  With update tracking on, tombstoned cells are never reused, so the cells
  written since the last `seal()` are exactly those at or after the update
  cursor (update_handle, update_lane) in chain-then-lane order.
  """

  def __init__(
    self,
    head: np.ndarray,
    pool: SlabPool,
    layout: SlabLayout,
    *,
    track_updates: bool = False,
  ):
    self._head = head
    self._pool = pool
    self.layout = layout
    self.track_updates = track_updates
    self.is_updated = False
    self.update_handle = A_INDEX_POINTER
    self.update_lane = 0
    self._lock = threading.Lock()

  @property
  def update_cursor(self) -> tuple[int, int]:
    return self.update_handle, self.update_lane

  def slab(self, handle: int) -> np.ndarray:
    if handle == A_INDEX_POINTER:
      return self._head
    return self._pool.slab(handle)

  def next_handle(self, handle: int) -> int:
    return int(self.slab(handle)[self.layout.next_lane])

  def handles(self) -> Iterator[int]:
    handle = A_INDEX_POINTER
    while handle != INVALID_ADDRESS:
      yield handle
      handle = self.next_handle(handle)

  def check_chain(self) -> list[int]:
    """Walks the chain, failing on a revisited handle."""
    seen: list[int] = []
    visited: set[int] = set()
    for handle in self.handles():
      if handle in visited:
        raise MeerkatInternalException(f"Slab chain revisits handle {handle}.")
      visited.add(handle)
      seen.append(handle)
    return seen

  def insert(self, key: int, weight: int | None = None) -> InsertOutcome:
    self._check_key(key)
    self._check_weight(weight)
    lanes = self.layout.key_lanes
    with self._lock:
      target: tuple[int, int] | None = None
      tail = A_INDEX_POINTER
      for handle in self.handles():
        slab = self.slab(handle)
        keys = slab[lanes]
        hits = np.flatnonzero(keys == key)
        if hits.size:
          if weight is None:
            return InsertOutcome.ALREADY_PRESENT
          slab[int(lanes[hits[0]]) + 1] = weight
          return InsertOutcome.UPDATED
        if target is None:
          writable = keys == EMPTY_KEY
          if not self.track_updates:
            writable |= keys == TOMBSTONE_KEY
          free = np.flatnonzero(writable)
          if free.size:
            target = (handle, int(lanes[free[0]]))
        tail = handle

      if target is None:
        new_handle = self._pool.alloc()
        target = (new_handle, int(lanes[0]))
        self._write(target, key, weight)
        # Publish the filled slab by linking it at the tail.
        self.slab(tail)[self.layout.next_lane] = new_handle
      else:
        self._write(target, key, weight)

      if self.track_updates:
        self._mark_updated(*target)
      return InsertOutcome.INSERTED

  def delete(self, key: int) -> bool:
    self._check_key(key)
    lanes = self.layout.key_lanes
    with self._lock:
      for handle in self.handles():
        slab = self.slab(handle)
        hits = np.flatnonzero(slab[lanes] == key)
        if hits.size:
          lane = int(lanes[hits[0]])
          slab[lane] = TOMBSTONE_KEY
          if self.layout.weighted:
            slab[lane + 1] = TOMBSTONE_KEY
          return True
    return False

  def search(self, key: int) -> tuple[bool, int | None]:
    self._check_key(key)
    lanes = self.layout.key_lanes
    with self._lock:
      for handle in self.handles():
        slab = self.slab(handle)
        hits = np.flatnonzero(slab[lanes] == key)
        if hits.size:
          if self.layout.weighted:
            return True, int(slab[int(lanes[hits[0]]) + 1])
          return True, None
    return False, None

  def seal(self) -> None:
    """Moves the update cursor to the next writable cell and clears the flag."""
    with self._lock:
      if not self.is_updated:
        return
      tail = A_INDEX_POINTER
      for handle in self.handles():
        tail = handle
      lanes = self.layout.key_lanes
      free = np.flatnonzero(self.slab(tail)[lanes] == EMPTY_KEY)
      self.update_handle = tail
      self.update_lane = int(lanes[free[0]]) if free.size else INVALID_LANE
      self.is_updated = False

  def live_count(self) -> int:
    lanes = self.layout.key_lanes
    count = 0
    for handle in self.handles():
      keys = self.slab(handle)[lanes]
      count += int(((keys != EMPTY_KEY) & (keys != TOMBSTONE_KEY)).sum())
    return count

  def entries(self) -> Iterator[tuple[int, int | None]]:
    lanes = self.layout.key_lanes
    for handle in self.handles():
      slab = self.slab(handle)
      for lane in lanes:
        key = int(slab[lane])
        if key == EMPTY_KEY or key == TOMBSTONE_KEY:
          continue
        yield key, int(slab[lane + 1]) if self.layout.weighted else None

  def _write(self, target: tuple[int, int], key: int, weight: int | None):
    handle, lane = target
    slab = self.slab(handle)
    if weight is not None:
      slab[lane + 1] = weight
    slab[lane] = key

  def _mark_updated(self, handle: int, lane: int) -> None:
    # INVALID_LANE means the sealed tail was full: updates start in the slab
    # that has just been chained.
    if self.update_lane == INVALID_LANE:
      self.update_handle, self.update_lane = handle, lane
    self.is_updated = True

  def _check_key(self, key: int) -> None:
    if is_sentinel_key(key):
      raise SentinelKeyError(f"Key {key} collides with a sentinel value.")

  def _check_weight(self, weight: int | None) -> None:
    if self.layout.weighted:
      if weight is None:
        raise MeerkatDeveloperException("Map slab lists need a weight.")
      if not 0 <= weight < 2**32:
        raise MeerkatDeveloperException(
          f"Weight {weight} does not fit in 32 bits."
        )
    elif weight is not None:
      raise MeerkatDeveloperException("Set slab lists do not store weights.")


def list_insert(
  slab_list: SlabList, key: int, weight: int | None = None
) -> InsertOutcome:
  return slab_list.insert(key, weight)


def list_delete(slab_list: SlabList, key: int) -> bool:
  return slab_list.delete(key)


def list_search(slab_list: SlabList, key: int) -> tuple[bool, int | None]:
  return slab_list.search(key)
