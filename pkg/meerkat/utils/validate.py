from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar, cast

import pydantic

from meerkat.exceptions import MeerkatDeveloperException

newline = "\n"
dash = "- "

F = TypeVar("F", bound=Callable[..., Any])


def validate(fn: F) -> F:
  validated_fn = pydantic.validate_call(
    fn, config=pydantic.ConfigDict(arbitrary_types_allowed=True)
  )

  @wraps(fn)
  def wrapper(*args: Any, **kw_args: Any):
    try:
      return validated_fn(*args, **kw_args)
    except pydantic.ValidationError as e:
      raise MeerkatDeveloperException(
        f"""invalid arguments to `{fn.__name__}`:
  {newline.join([dash + "__"
                 + " ".join(str(element) for element in error['loc']) + "__: "
                 + error['msg'] for error in e.errors()])}"""
      ) from e

  return cast(F, wrapper)
