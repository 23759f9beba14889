import numpy as np
import pytest

from meerkat.algorithms import (
  INF,
  INVALID_NODE,
  SsspTree,
  pack,
  sssp_decremental,
  sssp_decremental_frontier,
  sssp_incremental,
  sssp_invalidate,
  sssp_propagate_invalidation,
  sssp_static,
)
from meerkat.exceptions import CycleDetectedError, UnweightedGraphError
from meerkat.graph_core import (
  DynamicGraph,
  EdgeBatch,
  delete_edges,
  graph_new,
  insert_edges,
  search_edge,
  snapshot_adjacency,
)
from meerkat.oracles import PlainGraph, oracle_dijkstra
from meerkat.tests.fixtures import build_graph, random_edges


def weighted_graph(vertex_n, edges, weights, **kwargs) -> DynamicGraph:
  return build_graph(vertex_n, EdgeBatch.from_pairs(edges, weights), **kwargs)


def assert_tree_invariant(g: DynamicGraph, tree: SsspTree) -> None:
  distances = tree.distances().tolist()
  parents = tree.parents().tolist()
  for v in range(g.vertex_n):
    if v == tree.src or distances[v] == INF:
      continue
    p = parents[v]
    found, weight = search_edge(g, p, v)
    assert found
    assert distances[p] != INF
    assert distances[v] == distances[p] + weight


def assert_matches_static(g: DynamicGraph, tree: SsspTree) -> None:
  fresh = sssp_static(g, tree.src)
  assert np.array_equal(tree.nodes.values, fresh.nodes.values)
  expected = oracle_dijkstra(PlainGraph.from_snapshot(snapshot_adjacency(g)), tree.src)
  assert np.array_equal(tree.distances(), expected)


def test_chain():
  g = weighted_graph(3, [(0, 1), (1, 2)], [2, 2])
  tree = sssp_static(g, 0)
  assert tree.distances().tolist() == [0, 2, 4]
  assert tree.parents().tolist() == [0, 0, 1]


def test_source_without_out_edges():
  g = weighted_graph(3, [(1, 2)], [1])
  tree = sssp_static(g, 0)
  assert tree.nodes.values.tolist() == [pack(0, 0), INVALID_NODE, INVALID_NODE]


def test_unweighted_graph_rejected():
  with pytest.raises(UnweightedGraphError):
    sssp_static(graph_new(2), 0)


def test_ties_prefer_smaller_parent():
  g = weighted_graph(4, [(0, 2), (0, 1), (2, 3), (1, 3)], [1, 1, 1, 1])
  assert sssp_static(g, 0).parents().tolist()[3] == 1


@pytest.mark.parametrize("width", [4, 32])
@pytest.mark.parametrize("workers", [1, 4])
def test_random_graph_matches_dijkstra(width, workers):
  batch = random_edges(200, 1600, 11, weighted=True)
  g = build_graph(200, batch, width=width, workers=workers)
  tree = sssp_static(g, 0)
  pg = PlainGraph.from_edges(200, batch.pairs(), batch.weights.tolist())
  assert np.array_equal(tree.distances(), oracle_dijkstra(pg, 0))
  assert_tree_invariant(g, tree)


def test_scaling_weights_preserves_parents():
  batch = random_edges(80, 500, 5, weighted=True, max_weight=5)
  g1 = build_graph(80, batch)
  scaled = EdgeBatch(batch.src, batch.dst, batch.weights * 3)
  g3 = build_graph(80, scaled)
  t1, t3 = sssp_static(g1, 0), sssp_static(g3, 0)
  reachable = t1.distances() != INF
  assert np.array_equal(t3.distances()[reachable], t1.distances()[reachable] * 3)
  assert np.array_equal(t3.parents(), t1.parents())


def test_incremental_edge_that_shortens_nothing():
  g = weighted_graph(3, [(0, 1), (1, 2)], [2, 2])
  tree = sssp_static(g, 0)
  before = tree.nodes.values.copy()
  batch = EdgeBatch.from_pairs([(0, 2)], [9])
  insert_edges(g, batch)
  sssp_incremental(g, tree, batch)
  assert np.array_equal(tree.nodes.values, before)


def test_incremental_shortcut():
  g = weighted_graph(3, [(0, 1), (1, 2)], [2, 2])
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(0, 2)], [1])
  insert_edges(g, batch)
  sssp_incremental(g, tree, batch)
  assert tree.distances().tolist() == [0, 2, 1]
  assert tree.parents().tolist()[2] == 0


@pytest.mark.parametrize("workers", [1, 3])
def test_incremental_batches_match_static(workers):
  everything = random_edges(150, 2400, 21, weighted=True)
  base = EdgeBatch(everything.src[:1000], everything.dst[:1000], everything.weights[:1000])
  g = build_graph(150, base, workers=workers)
  tree = sssp_static(g, 3)
  for k in range(10):
    lo, hi = 1000 + 140 * k, 1000 + 140 * (k + 1)
    batch = EdgeBatch(everything.src[lo:hi], everything.dst[lo:hi], everything.weights[lo:hi])
    insert_edges(g, batch)
    sssp_incremental(g, tree, batch)
    assert_matches_static(g, tree)
    assert_tree_invariant(g, tree)


def test_invalidate_non_tree_edge():
  g = weighted_graph(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 5])
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(0, 2)])
  delete_edges(g, batch)
  assert sssp_invalidate(g, tree, batch) == 0


def test_invalidate_tree_edge():
  g = weighted_graph(3, [(0, 1), (1, 2)], [1, 1])
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(1, 2)])
  delete_edges(g, batch)
  assert sssp_invalidate(g, tree, batch) == 1
  assert tree.nodes.values[2] == INVALID_NODE


def test_invalidate_counts_tree_edges_in_mixed_batch():
  batch = random_edges(100, 700, 2, weighted=True)
  g = build_graph(100, batch)
  tree = sssp_static(g, 0)
  parents = tree.parents().tolist()
  deleted = EdgeBatch(batch.src[::5], batch.dst[::5])
  expected = {v for u, v in deleted.pairs() if parents[v] == u and v != 0}
  delete_edges(g, deleted)
  assert sssp_invalidate(g, tree, deleted) == len(expected)


def test_propagate_with_nothing_invalid():
  g = weighted_graph(3, [(0, 1), (1, 2)], [1, 1])
  assert sssp_propagate_invalidation(g, sssp_static(g, 0)) == 0


def test_propagate_invalidates_subtree():
  g = weighted_graph(
    6, [(0, 1), (1, 2), (1, 3), (2, 4), (0, 5)], [1, 1, 1, 1, 1]
  )
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(0, 1)])
  delete_edges(g, batch)
  assert sssp_invalidate(g, tree, batch) == 1
  assert sssp_propagate_invalidation(g, tree) == 3
  invalid = (tree.nodes.values == INVALID_NODE).tolist()
  assert invalid == [False, True, True, True, True, False]


def test_propagate_leaves_unreachable_vertices_alone():
  g = weighted_graph(4, [(0, 1), (2, 3)], [1, 1])
  tree = sssp_static(g, 0)
  assert sssp_propagate_invalidation(g, tree) == 0
  assert tree.nodes.values[3] == INVALID_NODE


def test_propagate_detects_parent_cycle():
  g = weighted_graph(4, [(0, 1), (1, 2), (2, 1)], [1, 1, 1])
  tree = sssp_static(g, 0)
  tree.nodes.values[1] = pack(5, 2)
  tree.nodes.values[2] = pack(5, 1)
  with pytest.raises(CycleDetectedError):
    sssp_propagate_invalidation(g, tree)


def test_decremental_frontier_empty_when_all_valid():
  g = weighted_graph(3, [(0, 1), (1, 2)], [1, 1])
  assert len(sssp_decremental_frontier(g, sssp_static(g, 0))) == 0


def test_decremental_frontier_holds_crossing_edges_only():
  g = weighted_graph(
    5, [(0, 1), (1, 2), (0, 3), (3, 2), (2, 4), (3, 4)], [1, 1, 1, 5, 1, 9]
  )
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(1, 2)])
  delete_edges(g, batch)
  sssp_invalidate(g, tree, batch)
  sssp_propagate_invalidation(g, tree)
  frontier = sssp_decremental_frontier(g, tree)
  crossing = {(int(e["src"]), int(e["dst"]), int(e["weight"])) for e in frontier.items}
  assert crossing == {(3, 2, 5), (3, 4, 9)}


def test_decremental_repairs_to_static():
  g = weighted_graph(
    5, [(0, 1), (1, 2), (0, 3), (3, 2), (2, 4), (3, 4)], [1, 1, 1, 5, 1, 9]
  )
  tree = sssp_static(g, 0)
  batch = EdgeBatch.from_pairs([(1, 2)])
  delete_edges(g, batch)
  sssp_decremental(g, tree, batch)
  assert tree.distances().tolist() == [0, 1, 6, 1, 7]
  assert tree.last_run.invalidated == 1
  assert tree.last_run.propagated == 1


@pytest.mark.parametrize("width", [4, 32])
def test_decremental_batches_match_static(width):
  everything = random_edges(150, 2000, 31, weighted=True)
  g = build_graph(150, everything, width=width)
  tree = sssp_static(g, 0)
  order = np.random.default_rng(1).permutation(len(everything))
  for k in range(10):
    pick = order[120 * k : 120 * (k + 1)]
    batch = EdgeBatch(everything.src[pick], everything.dst[pick])
    delete_edges(g, batch)
    sssp_decremental(g, tree, batch)
    assert_matches_static(g, tree)
    assert_tree_invariant(g, tree)


if __name__ == "__main__":
  raise SystemExit(pytest.main([__file__]))
