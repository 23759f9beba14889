"""Sentinel encodings shared by slabs, handles and tree nodes."""

import numpy as np

# Key sentinels. Real vertex ids are strictly below TOMBSTONE_KEY.
EMPTY_KEY = 2**32 - 2
TOMBSTONE_KEY = 2**32 - 3
INVALID_VERTEX = 2**32 - 1
MAX_VERTEX_ID = TOMBSTONE_KEY - 1

# Handle sentinels stored in (or compared against) the next-slab cell.
A_INDEX_POINTER = 2**32 - 2
INVALID_ADDRESS = 2**32 - 1

INVALID_LANE = -1

DEFAULT_GROUP_WIDTH = 32

CELL_DTYPE = np.uint32


def is_sentinel_key(key: int) -> bool:
  return key > MAX_VERTEX_ID or key < 0


def is_valid_vertex(word: int) -> bool:
  return word != EMPTY_KEY and word != TOMBSTONE_KEY
