import logging
from collections.abc import Sequence

import numpy as np
from absl import app, flags

from meerkat.config import app_config
from meerkat.exceptions import MeerkatException, VerificationFailedError
from meerkat.graph_core import bucket_counts
from meerkat.ingest import (
  CreateExperimentConfig,
  EdgeList,
  Report,
  parse_edge_list,
  run_experiment,
  write_report,
)
from meerkat.ingest.batches import edge_units
from meerkat.slab_store import SlabLayout

FLAGS = flags.FLAGS

flags.DEFINE_enum(
  "algo", "bfs", ["bfs", "sssp", "pr", "tc", "wcc"], "algorithm to run."
)
flags.DEFINE_enum(
  "mode",
  "incremental",
  ["static", "incremental", "decremental"],
  "how batches change the graph.",
)
BATCH_SIZE = flags.DEFINE_integer("batch-size", 1000, "edges per batch.")
flags.DEFINE_integer("batches", 10, "number of batches.")
BASE_FRACTION = flags.DEFINE_float(
  "base-fraction", 0.5, "share of the edges in the incremental base graph."
)
flags.DEFINE_integer("seed", 0, "seed for the batch shuffle and weights.")
flags.DEFINE_float("lf", app_config.load_factor, "slab list load factor.")
NO_HASH = flags.DEFINE_bool("no-hash", False, "one slab list per vertex.")
GROUP_WIDTH = flags.DEFINE_integer(
  "group-width", app_config.group_width, "lanes per group."
)
flags.DEFINE_integer("src", 0, "source vertex for bfs and sssp.")
flags.DEFINE_float("damping", 0.85, "PageRank damping factor.")
flags.DEFINE_float("eps", 1e-5, "PageRank L1 convergence threshold.")
MAX_ITER = flags.DEFINE_integer("max-iter", 100, "PageRank iteration cap.")
flags.DEFINE_string("report", None, "where to write the per-batch report.")
flags.DEFINE_enum("format", "csv", ["csv", "json"], "report file format.")
flags.DEFINE_integer("workers", app_config.workers, "worker threads.")
flags.DEFINE_bool(
  "symmetrize",
  None,
  "store both orientations of every edge; defaults to on for tc and wcc.",
)
INPUT_FORMAT = flags.DEFINE_enum(
  "input-format",
  "auto",
  ["auto", "snap", "dimacs-gr", "weighted-tsv"],
  "edge list file format.",
)
INJECT_FAULT = flags.DEFINE_bool(
  "inject-fault", False, "corrupt the first dynamic result (testing only)."
)

COMMANDS = ("info", "run")

FgGreen = "\x1b[32m"
FgRed = "\x1b[31m"
FgMagenta = "\x1b[35m"
Reset = "\x1b[0m"


def main(argv: Sequence[str]) -> int:
  if len(argv) != 3 or argv[1] not in COMMANDS:
    print(
      f"""{FgRed}ERROR: expected a command and an edge list file.{Reset}

Example commands:
${FgMagenta} meerkat info graph.txt{Reset}
${FgMagenta} meerkat run graph.txt --algo=sssp --batches=10{Reset}"""
    )
    return 1

  command, path = argv[1], argv[2]
  try:
    el = parse_edge_list(path, INPUT_FORMAT.value)
    if command == "info":
      print_info(el)
      return 0
    cfg = CreateExperimentConfig(
      algorithm=FLAGS.algo,
      mode=FLAGS.mode,
      base_fraction=BASE_FRACTION.value,
      batch_size=BATCH_SIZE.value,
      batches=FLAGS.batches,
      seed=FLAGS.seed,
      lf=FLAGS.lf,
      hashing_enabled=not NO_HASH.value,
      group_width=GROUP_WIDTH.value,
      workers=FLAGS.workers,
      src=FLAGS.src,
      damping=FLAGS.damping,
      eps=FLAGS.eps,
      max_iter=MAX_ITER.value,
      symmetrize=FLAGS.symmetrize,
      inject_fault=INJECT_FAULT.value,
    )
    report = run_experiment(cfg, el)
    if FLAGS.report:
      write_report(report, FLAGS.report, FLAGS.format)
    log_summary(report)
    return 0
  except VerificationFailedError as e:
    logging.error("%s", e)
    return 2
  except (MeerkatException, OSError) as e:
    logging.error("%s", e)
    return 1


def print_info(el: EdgeList) -> None:
  symmetric = bool(FLAGS.symmetrize)
  edges = edge_units(el, symmetric)
  oriented = edges.oriented()
  degrees = oriented.out_degree_hints(el.vertex_n)
  layout = SlabLayout(width=GROUP_WIDTH.value, weighted=el.weighted)
  buckets = bucket_counts(
    degrees, FLAGS.lf, layout.capacity, hashing_enabled=not NO_HASH.value
  )
  self_loops = int(np.count_nonzero(oriented.src == oriented.dst))
  print(f"format:      {el.source_format}")
  print(f"vertices:    {el.vertex_n}")
  print(f"edges:       {len(oriented)}{' (symmetrized)' if symmetric else ''}")
  print(f"weighted:    {el.weighted}")
  print(f"self-loops:  {self_loops}")
  print(
    f"out-degree:  min {int(degrees.min())}, mean {degrees.mean():.2f}, "
    f"max {int(degrees.max())}"
  )
  print(
    f"slab lists:  {int(buckets.sum())} head slabs at lf={FLAGS.lf}, "
    f"at most {int(buckets.max())} per vertex"
  )


def log_summary(report: Report) -> None:
  if report.speedup is None:
    summary = f"{report.algorithm}: static baseline only"
  else:
    last = report.rows[-1]
    summary = (
      f"{report.algorithm} ({report.mode}): {len(report.rows)} batches of "
      f"{report.batch_size}, verified; self-relative speedup "
      f"{report.speedup:.2f} (static {last.cum_static:.1f} ms, "
      f"dynamic {last.cum_dynamic:.1f} ms)"
    )
  print(f"\n{FgGreen}{summary}{Reset}")


def run_main():
  app.run(main)


if __name__ == "__main__":
  run_main()
