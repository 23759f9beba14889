from .dataclass_utils import (
  MeerkatJSONEncoder as MeerkatJSONEncoder,
)
from .dataclass_utils import (
  diff_results as diff_results,
)
