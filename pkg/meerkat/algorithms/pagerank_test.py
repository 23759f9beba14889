import numpy as np
import pytest

from meerkat.algorithms import (
  PageRankState,
  out_degrees,
  pagerank,
  pagerank_dynamic,
  pagerank_init,
)
from meerkat.exceptions import BadDampingError, BadEpsilonError
from meerkat.graph_core import EdgeBatch, delete_edges, graph_new, insert_edges
from meerkat.oracles import PlainGraph, oracle_pagerank
from meerkat.tests.fixtures import build_graph, random_edges


def in_edge_graph(vertex_n, batch, **kwargs):
  return build_graph(vertex_n, batch.reversed(), **kwargs)


def test_two_cycle():
  g_in = in_edge_graph(2, EdgeBatch.from_pairs([(0, 1), (1, 0)]))
  state = pagerank(g_in, pagerank_init(2))
  assert state.pr.tolist() == pytest.approx([0.5, 0.5], abs=1e-15)


def test_isolated_vertex():
  state = pagerank(graph_new(1), pagerank_init(1))
  assert state.pr.tolist() == pytest.approx([1.0])


@pytest.mark.parametrize("d", [0.0, 1.0, -0.2, 1.5])
def test_bad_damping(d):
  with pytest.raises(BadDampingError):
    pagerank(graph_new(2), pagerank_init(2, d=d))


def test_bad_epsilon():
  with pytest.raises(BadEpsilonError):
    pagerank(graph_new(2), pagerank_init(2, eps=0.0))


def test_out_degrees_from_in_edges():
  batch = EdgeBatch.from_pairs([(0, 1), (0, 2), (2, 1)])
  assert out_degrees(in_edge_graph(3, batch)).tolist() == [2, 0, 1]


@pytest.mark.parametrize("width", [4, 32])
@pytest.mark.parametrize("workers", [1, 4])
def test_random_graph_matches_dense_oracle(width, workers):
  batch = random_edges(100, 600, 13)
  g_in = in_edge_graph(100, batch, width=width, workers=workers)
  state = pagerank(g_in, pagerank_init(100, d=0.85, eps=1e-5))
  expected = oracle_pagerank(
    PlainGraph.from_edges(100, batch.pairs()), d=0.85, eps=1e-5
  )
  assert np.abs(state.pr - expected).sum() <= 1e-6


def test_mass_is_conserved_without_dangling_vertices():
  pairs = [(v, (v + 1) % 50) for v in range(50)] + [(v, (v * 7) % 50) for v in range(50)]
  batch = EdgeBatch.from_pairs([p for p in pairs if p[0] != p[1]])
  g_in = in_edge_graph(50, batch)
  state = pagerank_init(50, max_iter=1)
  for _ in range(20):
    state = pagerank(g_in, state)
    assert abs(state.pr.sum() - 1.0) <= 1e-9


def test_max_iter_caps_iterations():
  g_in = in_edge_graph(100, random_edges(100, 400, 2))
  state = pagerank(g_in, pagerank_init(100, eps=1e-15, max_iter=3))
  assert state.iterations == 3


def test_empty_batch_needs_one_iteration():
  g_in = in_edge_graph(60, random_edges(60, 300, 4))
  state = pagerank(g_in, pagerank_init(60))
  again = pagerank_dynamic(g_in, state, EdgeBatch.empty(), "incremental")
  assert again.iterations == 1
  assert np.abs(again.pr - state.pr).sum() <= state.eps


def test_insert_then_delete_returns_to_original():
  g_in = in_edge_graph(60, random_edges(60, 300, 4))
  original = pagerank(g_in, pagerank_init(60))
  batch = EdgeBatch.from_pairs([(1, 59), (2, 58), (3, 57)])
  present = set(random_edges(60, 300, 4).pairs())
  batch = EdgeBatch.from_pairs([p for p in batch.pairs() if p not in present])
  insert_edges(g_in, batch.reversed())
  state = pagerank_dynamic(g_in, original, batch, "incremental")
  delete_edges(g_in, batch.reversed())
  state = pagerank_dynamic(g_in, state, batch, "decremental")
  assert np.abs(state.pr - original.pr).sum() <= 10 * original.eps


def test_warm_start_agrees_with_cold_start():
  everything = random_edges(120, 900, 17)
  base = EdgeBatch(everything.src[:700], everything.dst[:700])
  batch = EdgeBatch(everything.src[700:], everything.dst[700:])
  g_in = in_edge_graph(120, base)
  warm = pagerank(g_in, pagerank_init(120))
  insert_edges(g_in, batch.reversed())
  warm = pagerank_dynamic(g_in, warm, batch, "incremental")
  cold = pagerank(g_in, pagerank_init(120))
  assert np.abs(warm.pr - cold.pr).sum() <= 10 * cold.eps
  assert isinstance(warm, PageRankState)


if __name__ == "__main__":
  raise SystemExit(pytest.main([__file__]))
