"""Stripe-parallel execution of lane-group work."""

import concurrent.futures
from collections.abc import Callable
from typing import TypeVar

T = TypeVar("T")


def stripe_bounds(n_items: int, stripe: int) -> list[tuple[int, int]]:
  return [(lo, min(lo + stripe, n_items)) for lo in range(0, n_items, stripe)]


def run_stripes(
  n_items: int,
  stripe: int,
  fn: Callable[[int, int], T],
  workers: int = 1,
) -> list[T]:
  """Calls `fn(lo, hi)` once per stripe of `stripe` consecutive items.

  With one worker the stripes run in order on the calling thread, which is the
  deterministic reference mode. Results are always returned in stripe order.
  """
  if stripe < 1:
    raise ValueError(f"stripe must be positive, got {stripe}")
  bounds = stripe_bounds(n_items, stripe)
  if workers <= 1 or len(bounds) <= 1:
    return [fn(lo, hi) for lo, hi in bounds]
  with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
    futures = [executor.submit(fn, lo, hi) for lo, hi in bounds]
    return [f.result() for f in futures]
