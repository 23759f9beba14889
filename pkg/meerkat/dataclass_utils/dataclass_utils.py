import json
from dataclasses import asdict, is_dataclass
from typing import Any

import numpy as np
from deepdiff import DeepDiff


class MeerkatJSONEncoder(json.JSONEncoder):
  """JSON encoder for report rows and algorithm results.

  numpy scalars become Python numbers, numpy arrays become lists and
  dataclasses become dicts.
  """

  def default(self, obj):
    if isinstance(obj, np.integer):
      return int(obj)
    if isinstance(obj, np.floating):
      return float(obj)
    if isinstance(obj, np.bool_):
      return bool(obj)
    if isinstance(obj, np.ndarray):
      return obj.tolist()

    if is_dataclass(obj) and not isinstance(obj, type):
      return asdict(obj)

    return super().default(obj)


def _plain(value: Any) -> Any:
  if isinstance(value, np.ndarray):
    return value.tolist()
  if isinstance(value, np.generic):
    return value.item()
  return value


def diff_results(expected: Any, actual: Any) -> dict[str, Any]:
  """Differences between two algorithm results, empty when they agree.

  Arrays are compared element-wise.
  """
  return DeepDiff(_plain(expected), _plain(actual)).to_dict()
