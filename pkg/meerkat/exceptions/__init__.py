class MeerkatException(Exception):
  pass


class MeerkatUserException(MeerkatException):
  def __str__(self):
    return f"**User Error:** {super().__str__()}"


class MeerkatInternalException(MeerkatException):
  def __str__(self):
    return f"**Meerkat Internal Error:** {super().__str__()}"


class MeerkatDeveloperException(MeerkatException):
  def __str__(self):
    return f"**Meerkat Developer Error:** {super().__str__()}"


##########################################################
# Storage errors
##########################################################


class CapacityOverflowError(MeerkatInternalException):
  """Raised when the slab handle space or a frontier is exhausted."""


class SentinelKeyError(MeerkatDeveloperException):
  pass


class BadLoadFactorError(MeerkatDeveloperException):
  pass


class VertexOutOfRangeError(MeerkatDeveloperException):
  pass


class BucketOutOfRangeError(MeerkatDeveloperException):
  pass


class TrackingDisabledError(MeerkatDeveloperException):
  pass


class IterateEndError(MeerkatDeveloperException):
  pass


class LaneOutOfRangeError(MeerkatDeveloperException):
  pass


##########################################################
# Algorithm errors
##########################################################


class UnweightedGraphError(MeerkatDeveloperException):
  pass


class WeightedGraphError(MeerkatDeveloperException):
  pass


class CycleDetectedError(MeerkatInternalException):
  """A parent walk in the dependence tree did not reach the source."""


class BadDampingError(MeerkatDeveloperException):
  pass


class BadEpsilonError(MeerkatDeveloperException):
  pass


class NotSymmetricError(MeerkatDeveloperException):
  pass


class DivisibilityViolationError(MeerkatDeveloperException):
  """Triangle tallies were not divisible as the counting identities require.

  This signals a broken precondition, e.g. an insertion batch overlapping
  edges that were already present in the graph.
  """


##########################################################
# Ingestion / harness errors
##########################################################


class ParseError(MeerkatUserException):
  def __init__(self, message: str, line_number: int | None = None):
    self.line_number = line_number
    if line_number is not None:
      message = f"line {line_number}: {message}"
    super().__init__(message)


class EmptyGraphError(MeerkatUserException):
  pass


class InsufficientEdgesError(MeerkatUserException):
  pass


class ConfigError(MeerkatUserException):
  pass


class VerificationFailedError(MeerkatException):
  """The dynamic result disagreed with the static recomputation."""

  def __init__(self, message: str, batch_idx: int | None = None):
    self.batch_idx = batch_idx
    super().__init__(message)
