import pytest

from meerkat.exceptions import EmptyGraphError, MeerkatDeveloperException, ParseError
from meerkat.ingest import parse_edge_lines, parse_edge_list


def parse(text: str, fmt="auto"):
  return parse_edge_lines(text.splitlines(), fmt)


def test_snap_pairs():
  el = parse("0 1\n1 2\n")
  assert el.edges.pairs() == [(0, 1), (1, 2)]
  assert el.vertex_n == 3
  assert not el.weighted
  assert el.source_format == "snap"


def test_comments_are_skipped():
  el = parse("# c\n% also a comment\n\n0 1")
  assert el.edges.pairs() == [(0, 1)]


def test_dimacs_ids_are_shifted():
  el = parse("c sample\np sp 2 1\na 1 2 7\n")
  assert el.source_format == "dimacs-gr"
  assert el.edges.pairs() == [(0, 1)]
  assert el.edges.weights.tolist() == [7]


def test_percent_comment_inside_dimacs():
  el = parse("\n".join(["p sp 2 1", "% generated", "a 1 2 7"]), "dimacs-gr")
  assert el.edges.pairs() == [(0, 1)]
  assert el.edges.weights.tolist() == [7]


def test_indented_comment_is_skipped():
  el = parse("\n".join(["  # header", "0 1"]), "snap")
  assert el.edges.pairs() == [(0, 1)]


def test_weighted_tsv():
  el = parse("0\t1\t4\n1\t2\t9\n")
  assert el.source_format == "weighted-tsv"
  assert el.edges.weights.tolist() == [4, 9]


def test_snap_with_weight_column():
  el = parse("0 1 3\n1 0 5\n", "snap")
  assert el.weighted
  assert el.edges.weights.tolist() == [3, 5]


def test_ids_are_compacted():
  el = parse("10 20\n20 30\n")
  assert el.vertex_n == 3
  assert el.edges.pairs() == [(0, 1), (1, 2)]
  assert el.original_ids.tolist() == [10, 20, 30]


def test_duplicate_edges_keep_last_weight():
  el = parse("0 1 3\n0 1 8\n")
  assert el.edges.pairs() == [(0, 1)]
  assert el.edges.weights.tolist() == [8]


def test_non_integer_token_reports_line():
  with pytest.raises(ParseError) as exc_info:
    parse("0 1\n1 x\n")
  assert exc_info.value.line_number == 2


def test_mixed_column_counts():
  with pytest.raises(ParseError) as exc_info:
    parse("0 1\n1 2 5\n")
  assert exc_info.value.line_number == 2


def test_weighted_tsv_needs_three_columns():
  with pytest.raises(ParseError):
    parse("0 1\n", "weighted-tsv")


def test_zero_weight_is_rejected():
  with pytest.raises(ParseError) as exc_info:
    parse("0 1 0\n")
  assert exc_info.value.line_number == 1


def test_bad_dimacs_arc():
  with pytest.raises(ParseError):
    parse("p sp 2 1\na 1 2\n", "dimacs-gr")
  with pytest.raises(ParseError):
    parse("a 0 2 3\n", "dimacs-gr")


def test_empty_graph():
  with pytest.raises(EmptyGraphError):
    parse("# only comments\n")


def test_parse_edge_list_reads_file(tmp_path):
  path = tmp_path / "graph.txt"
  path.write_text("# demo\n0 1\n1 2\n2 0\n")
  el = parse_edge_list(str(path))
  assert len(el) == 3
  assert el.vertex_n == 3


def test_parse_edge_list_rejects_unknown_format(tmp_path):
  path = tmp_path / "graph.txt"
  path.write_text("0 1\n")
  with pytest.raises(MeerkatDeveloperException):
    parse_edge_list(path, "metis")


if __name__ == "__main__":
  raise SystemExit(pytest.main([__file__]))
