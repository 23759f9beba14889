import math
import random

import numpy as np
import pytest

from meerkat.exceptions import (
  BadLoadFactorError,
  BucketOutOfRangeError,
  CapacityOverflowError,
  VertexOutOfRangeError,
)
from meerkat.graph_core import (
  EdgeBatch,
  HashParams,
  bucket_of,
  degree,
  delete_edges,
  edge_count,
  graph_from_batch,
  graph_new,
  insert_edges,
  search_edge,
  seal_updates,
  snapshot_adjacency,
)
from meerkat.slab_store import A_INDEX_POINTER, INVALID_LANE
from meerkat.tests.fixtures import adjacency_of, build_graph, random_edges


def test_bucket_count_from_hints():
  g = graph_new(3, [100, 1, 40], 0.6)
  assert g.bucket_count.tolist() == [6, 1, 3]
  assert g.arena.offsets.tolist() == [0, 6, 7]


def test_bucket_count_without_hashing():
  g = graph_new(3, [100, 1, 40], 0.6, hashing_enabled=False)
  assert g.bucket_count.tolist() == [1, 1, 1]


def test_bucket_count_weighted_uses_map_capacity():
  g = graph_new(1, [16], 1.0, weighted=True)
  assert g.bucket_count.tolist() == [2]


@pytest.mark.parametrize("seed", range(20))
def test_single_arena_sized_from_hints(seed):
  rng = random.Random(seed)
  width = rng.choice([4, 32])
  lf = rng.uniform(0.3, 1.0)
  hints = [rng.randrange(0, 500) for _ in range(rng.randrange(1, 60))]
  g = graph_new(len(hints), hints, lf, width=width)
  capacity = width - 1
  expected = sum(max(1, math.ceil(h / (lf * capacity))) for h in hints)
  assert g.arena.total == expected
  assert g.arena.slabs.shape == (expected, width)
  assert g.memory_stats().pool_slabs == 0


def test_missing_hints_mean_one_bucket():
  g = graph_new(4)
  assert g.bucket_count.tolist() == [1, 1, 1, 1]


@pytest.mark.parametrize("lf", [0.0, -1.0, 1.01])
def test_bad_load_factor(lf):
  with pytest.raises(BadLoadFactorError):
    graph_new(2, None, lf)


def test_arena_capacity_overflow():
  with pytest.raises(CapacityOverflowError):
    graph_new(3, [100, 1, 40], 0.6, max_slabs=5)


def test_bucket_of_single_bucket_is_zero():
  g = graph_new(2)
  assert all(bucket_of(g, 0, key) == 0 for key in range(100))


def test_bucket_of_is_deterministic():
  g = graph_new(1, [200], 0.5)
  assert bucket_of(g, 0, 12345) == bucket_of(g, 0, 12345)


def test_bucket_of_balance():
  params = HashParams()
  keys = np.random.default_rng(7).integers(0, 2**31, size=100_000).tolist()
  shares = np.bincount([params.bucket(k, 8) for k in keys], minlength=8)
  assert shares.max() / len(keys) <= 0.135


def test_hash_params_from_seed_are_reproducible():
  assert HashParams.from_seed(3) == HashParams.from_seed(3)
  assert HashParams.from_seed(3) != HashParams.from_seed(4)


def test_insert_into_empty_graph():
  g = graph_new(2)
  assert insert_edges(g, EdgeBatch.from_pairs([(0, 1), (1, 0)])) == 2


def test_reinsert_same_batch_inserts_nothing():
  g = graph_new(2)
  batch = EdgeBatch.from_pairs([(0, 1), (1, 0)])
  insert_edges(g, batch)
  assert insert_edges(g, batch) == 0
  assert edge_count(g) == 2


def test_insert_duplicates_within_batch_count_once():
  g = graph_new(3)
  assert insert_edges(g, EdgeBatch.from_pairs([(0, 1), (0, 1), (0, 2)])) == 2


def test_insert_undirected_batch():
  g = graph_new(3)
  assert insert_edges(g, EdgeBatch.from_pairs([(0, 1)], directed=False)) == 2
  assert search_edge(g, 1, 0) == (True, None)


def test_insert_vertex_out_of_range():
  g = graph_new(2)
  with pytest.raises(VertexOutOfRangeError):
    insert_edges(g, EdgeBatch.from_pairs([(0, 2)]))


def test_delete_existing_and_absent():
  g = graph_new(2)
  insert_edges(g, EdgeBatch.from_pairs([(0, 1)]))
  assert delete_edges(g, EdgeBatch.from_pairs([(0, 1)])) == 1
  assert search_edge(g, 0, 1) == (False, None)
  assert delete_edges(g, EdgeBatch.from_pairs([(0, 1)])) == 0


def test_weighted_search_and_latest_weight():
  g = graph_new(2, weighted=True)
  insert_edges(g, EdgeBatch.from_pairs([(0, 1)], [4]))
  assert search_edge(g, 0, 1) == (True, 4)
  delete_edges(g, EdgeBatch.from_pairs([(0, 1)]))
  insert_edges(g, EdgeBatch.from_pairs([(0, 1)], [9]))
  assert search_edge(g, 0, 1) == (True, 9)


def test_degree_counts():
  g = graph_new(4)
  assert degree(g, 0) == 0
  insert_edges(g, EdgeBatch.from_pairs([(0, 1), (0, 2), (0, 3)]))
  assert degree(g, 0) == 3
  assert edge_count(g) == 3


@pytest.mark.parametrize("width", [4, 32])
@pytest.mark.parametrize("weighted", [False, True])
def test_random_graph_matches_adjacency_oracle(width, weighted):
  batch = random_edges(100, 5000 if width == 32 else 1500, 1, weighted=weighted)
  g = build_graph(100, batch, width=width)
  oracle = adjacency_of(100, batch)
  assert snapshot_adjacency(g) == oracle
  assert [degree(g, v) for v in range(100)] == [len(a) for a in oracle]
  assert edge_count(g) == len(batch)
  for v in range(100):
    for u in oracle[v]:
      assert search_edge(g, v, u)[0]


@pytest.mark.parametrize("hashing_enabled", [False, True])
@pytest.mark.parametrize("workers", [1, 4])
def test_interleaved_updates_match_membership_oracle(hashing_enabled, workers):
  rng = random.Random(5)
  g = graph_new(
    30, [40] * 30, 0.6, hashing_enabled=hashing_enabled, workers=workers
  )
  oracle: set[tuple[int, int]] = set()
  for _ in range(20):
    pairs = [(rng.randrange(30), rng.randrange(30)) for _ in range(80)]
    batch = EdgeBatch.from_pairs(pairs)
    if rng.random() < 0.6:
      assert insert_edges(g, batch) == len(set(pairs) - oracle)
      oracle |= set(pairs)
    else:
      assert delete_edges(g, batch) == len(set(pairs) & oracle)
      oracle -= set(pairs)
  snapshot = snapshot_adjacency(g)
  assert {(u, v) for u in range(30) for v in snapshot[u]} == oracle


def test_seal_moves_cursor_to_next_free_lane():
  g = graph_new(2, update_tracking=True)
  insert_edges(g, EdgeBatch.from_pairs([(0, 1), (0, 2), (0, 3)]))
  assert g.vertex_updated(0)
  seal_updates(g)
  slab_list = g.list_at(0, 0)
  assert slab_list.update_cursor == (A_INDEX_POINTER, 3)
  assert not slab_list.is_updated
  assert not g.vertex_updated(0)


def test_seal_twice_is_a_no_op():
  g = graph_new(1, update_tracking=True)
  insert_edges(g, EdgeBatch.from_pairs([(0, 0)]))
  seal_updates(g)
  before = g.list_at(0, 0).update_cursor
  seal_updates(g)
  assert g.list_at(0, 0).update_cursor == before


def test_seal_full_list_gives_invalid_lane():
  g = graph_new(32, update_tracking=True)
  insert_edges(g, EdgeBatch.from_pairs([(0, v) for v in range(1, 32)]))
  seal_updates(g)
  assert g.list_at(0, 0).update_cursor == (A_INDEX_POINTER, INVALID_LANE)


def test_untouched_lists_keep_their_cursor():
  g = graph_new(3, update_tracking=True)
  insert_edges(g, EdgeBatch.from_pairs([(0, 1)]))
  seal_updates(g)
  insert_edges(g, EdgeBatch.from_pairs([(1, 2)]))
  seal_updates(g)
  assert g.list_at(0, 0).update_cursor == (A_INDEX_POINTER, 1)
  assert g.list_at(2, 0).update_cursor == (A_INDEX_POINTER, 0)


def test_list_at_bucket_out_of_range():
  g = graph_new(1, [100], 0.6)
  with pytest.raises(BucketOutOfRangeError):
    g.list_at(0, int(g.bucket_count[0]))


def test_memory_stats_counts_pool_growth():
  g = graph_new(5, width=4)
  insert_edges(g, EdgeBatch.from_pairs([(0, 1), (0, 2)]))
  stats = g.memory_stats()
  assert stats.arena_slabs == 5
  assert stats.pool_slabs == 0
  insert_edges(g, EdgeBatch.from_pairs([(1, v) for v in range(5)]))
  stats = g.memory_stats()
  assert stats.pool_slabs == 1
  assert stats.pool_high_water == 1
  assert stats.live_cells == edge_count(g) == 7


def test_graph_from_batch_holds_only_the_batch():
  like = graph_new(5, weighted=False, width=4)
  insert_edges(like, EdgeBatch.from_pairs([(0, 1)]))
  batch = EdgeBatch.from_pairs([(2, 3), (3, 4)], directed=False)
  update = graph_from_batch(batch, like)
  assert update.width == 4
  assert edge_count(update) == 4
  assert search_edge(update, 4, 3) == (True, None)
  assert not search_edge(update, 0, 1)[0]


if __name__ == "__main__":
  raise SystemExit(pytest.main([__file__]))
