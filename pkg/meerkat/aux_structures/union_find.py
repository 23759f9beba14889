import numpy as np

from meerkat.lane_engine import AtomicArray


class UnionFind:
  """Disjoint sets over 0..n-1, stored as a parent array.

  Parents only ever point to smaller ids, so every root is the minimum of
  its set and the structure stays acyclic under concurrent hooking.

  >>> uf = UnionFind(4)
  >>> uf.union_async(3, 1)
  >>> uf.find(3)
  1
  """

  def __init__(self, n: int):
    self.parents = AtomicArray(np.arange(n, dtype=np.int64))

  def __len__(self) -> int:
    return len(self.parents)

  def find(self, v: int) -> int:
    parents = self.parents.values
    while (p := int(parents[v])) != v:
      v = p
    return v

  def union_async(self, u: int, v: int) -> None:
    """Hooks the larger root under the smaller one, retrying on a lost CAS."""
    while True:
      root_u, root_v = self.find(u), self.find(v)
      if root_u == root_v:
        return
      high, low = max(root_u, root_v), min(root_u, root_v)
      if self.parents.compare_and_swap(high, high, low) == high:
        return

  def hook_min(self, v: int, candidate: int) -> None:
    """Atomically lowers parents[v] to `candidate` if that is smaller."""
    self.parents.fetch_min(v, candidate)

  def compress_all(self) -> None:
    """Pointer jumping until every vertex points at its root."""
    parents = self.parents.values
    while True:
      grand = parents[parents]
      if np.array_equal(grand, parents):
        return
      parents[:] = grand

  def components(self) -> np.ndarray:
    self.compress_all()
    return self.parents.values.copy()


def uf_new(n: int) -> UnionFind:
  return UnionFind(n)


def uf_union_async(uf: UnionFind, u: int, v: int) -> None:
  uf.union_async(u, v)


def uf_find(uf: UnionFind, v: int) -> int:
  return uf.find(v)


def uf_compress_all(uf: UnionFind) -> None:
  uf.compress_all()
