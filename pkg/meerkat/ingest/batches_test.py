import numpy as np
import pytest

from meerkat.exceptions import InsufficientEdgesError
from meerkat.graph_core import EdgeBatch
from meerkat.ingest import EdgeList, split_batches
from meerkat.ingest.batches import edge_units, with_synthetic_weights
from meerkat.tests.fixtures import random_edges


def edge_list(vertex_n=200, edge_n=10_000, seed=0, weighted=False) -> EdgeList:
  return EdgeList(
    edges=random_edges(vertex_n, edge_n, seed, weighted=weighted),
    vertex_n=vertex_n,
    source_format="snap",
    original_ids=np.arange(vertex_n),
  )


def pair_set(batch: EdgeBatch) -> set[tuple[int, int]]:
  return set(batch.pairs())


def test_same_seed_gives_identical_split():
  el = edge_list()
  first = split_batches(el, 0.5, 100, 5, seed=3)
  second = split_batches(el, 0.5, 100, 5, seed=3)
  assert first.base.pairs() == second.base.pairs()
  for a, b in zip(first.batches, second.batches):
    assert a.src.tobytes() == b.src.tobytes()
    assert a.dst.tobytes() == b.dst.tobytes()


def test_different_seeds_differ():
  el = edge_list()
  first = split_batches(el, 0.5, 100, 1, seed=1)
  second = split_batches(el, 0.5, 100, 1, seed=2)
  assert first.batches[0].pairs() != second.batches[0].pairs()


def test_incremental_split_is_disjoint():
  el = edge_list()
  split = split_batches(el, 0.5, 1000, 5, seed=0)
  assert len(split.base) == 5000
  seen = pair_set(split.base)
  for batch in split.batches:
    assert len(batch) == 1000
    assert not seen & pair_set(batch)
    seen |= pair_set(batch)
  assert seen == pair_set(el.edges)


def test_zero_batch_size_gives_empty_batches():
  split = split_batches(edge_list(), 0.5, 0, 3, seed=0)
  assert [len(b) for b in split.batches] == [0, 0, 0]


def test_insufficient_edges():
  with pytest.raises(InsufficientEdgesError):
    split_batches(edge_list(), 0.75, 1000, 5, seed=0)


def test_decremental_batches_come_from_the_graph():
  el = edge_list()
  split = split_batches(el, 0.0, 1000, 4, seed=0, mode="decremental")
  assert pair_set(split.base) == pair_set(el.edges)
  drawn: set[tuple[int, int]] = set()
  for batch in split.batches:
    assert pair_set(batch) <= pair_set(el.edges)
    assert not drawn & pair_set(batch)
    drawn |= pair_set(batch)


def test_decremental_insufficient_edges():
  with pytest.raises(InsufficientEdgesError):
    split_batches(edge_list(), 0.0, 3000, 4, seed=0, mode="decremental")


def test_static_mode_has_no_batches():
  el = edge_list()
  split = split_batches(el, 0.5, 100, 5, seed=0, mode="static")
  assert split.batches == []
  assert len(split.base) == len(el)


def test_symmetric_units_are_canonical_and_undirected():
  el = EdgeList(
    edges=EdgeBatch.from_pairs([(0, 1), (1, 0), (2, 1), (3, 3)]),
    vertex_n=4,
    source_format="snap",
    original_ids=np.arange(4),
  )
  units = edge_units(el, symmetric=True)
  assert not units.directed
  assert sorted(units.pairs()) == [(0, 1), (1, 2), (3, 3)]


def test_weights_travel_with_their_edges():
  el = edge_list(weighted=True)
  weight_of = dict(zip(el.edges.pairs(), el.edges.weights.tolist()))
  split = split_batches(el, 0.5, 100, 2, seed=0)
  for batch in [split.base, *split.batches]:
    assert [weight_of[p] for p in batch.pairs()] == batch.weights.tolist()


def test_synthetic_weights_in_range():
  weighted = with_synthetic_weights(random_edges(50, 500, 1), seed=4)
  assert weighted.weights.min() >= 1
  assert weighted.weights.max() <= 64
  again = with_synthetic_weights(random_edges(50, 500, 1), seed=4)
  assert weighted.weights.tolist() == again.weights.tolist()


if __name__ == "__main__":
  raise SystemExit(pytest.main([__file__]))
