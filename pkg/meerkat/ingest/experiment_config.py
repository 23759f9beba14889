from typing import Any, Literal

import pydantic
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from meerkat.config import app_config
from meerkat.exceptions import ConfigError

Algorithm = Literal["bfs", "sssp", "pr", "tc", "wcc"]
Mode = Literal["static", "incremental", "decremental"]

UNDIRECTED_ALGORITHMS = ("tc", "wcc")


class ExperimentConfig(BaseModel):
  """One benchmark run: the algorithm, its batches and the graph layout."""

  model_config = ConfigDict(frozen=True, extra="forbid")

  algorithm: Algorithm
  mode: Mode = "incremental"
  base_fraction: float = Field(default=0.5, ge=0, le=1)
  batch_size: int = Field(default=1000, ge=0)
  batches: int = Field(default=10, ge=0)
  seed: int = 0
  lf: float = Field(default_factory=lambda: app_config.load_factor, gt=0, le=1)
  hashing_enabled: bool = Field(
    default_factory=lambda: app_config.hashing_enabled
  )
  group_width: int = Field(default_factory=lambda: app_config.group_width)
  workers: int = Field(default_factory=lambda: app_config.workers, ge=1)
  src: int = Field(default=0, ge=0)
  damping: float = Field(default=0.85, gt=0, lt=1)
  eps: float = Field(default=1e-5, gt=0)
  max_iter: int = Field(default=100, ge=1)
  # None picks the algorithm's natural reading of the file.
  symmetrize: bool | None = None
  inject_fault: bool = False

  @field_validator("group_width")
  @classmethod
  def _check_group_width(cls, value: int) -> int:
    if value < 4 or value % 2:
      raise ValueError("group width must be an even number >= 4")
    return value

  @model_validator(mode="after")
  def _check_algorithm_mode(self) -> "ExperimentConfig":
    if self.algorithm == "wcc" and self.mode == "decremental":
      raise ValueError("wcc has no decremental variant")
    if self.algorithm in UNDIRECTED_ALGORITHMS and self.symmetrize is False:
      raise ValueError(f"{self.algorithm} needs a symmetrized graph")
    return self

  @property
  def symmetric(self) -> bool:
    if self.symmetrize is None:
      return self.algorithm in UNDIRECTED_ALGORITHMS
    return self.symmetrize

  @property
  def effective_batches(self) -> int:
    return 0 if self.mode == "static" else self.batches


def CreateExperimentConfig(**kwargs: Any) -> ExperimentConfig:
  try:
    return ExperimentConfig(**kwargs)
  except pydantic.ValidationError as e:
    details = "\n".join(
      f"- __{' '.join(str(part) for part in error['loc']) or 'config'}__: "
      f"{error['msg']}"
      for error in e.errors()
    )
    raise ConfigError(f"invalid experiment configuration:\n{details}") from e
