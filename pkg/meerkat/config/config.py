import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

load_dotenv()

# Handles are 32-bit; the two largest values are reserved sentinels.
HANDLE_SPACE = 2**32 - 2


class Config(BaseModel):
  """Meerkat process-wide defaults."""

  group_width: int = 32
  load_factor: float = Field(default=0.6, gt=0, le=1)
  workers: int = Field(default=1, ge=1)
  hashing_enabled: bool = True
  max_pool_slabs: int = Field(default=HANDLE_SPACE, ge=1, le=HANDLE_SPACE)

  @field_validator("group_width")
  @classmethod
  def _check_group_width(cls, value: int) -> int:
    if value < 4 or value % 2:
      raise ValueError("group width must be an even number >= 4")
    return value


def CreateConfigFromEnv() -> Config:
  return Config(
    group_width=os.getenv("MEERKAT_GROUP_WIDTH", "32"),  # type: ignore
    load_factor=os.getenv("MEERKAT_LOAD_FACTOR", "0.6"),  # type: ignore
    workers=os.getenv("MEERKAT_WORKERS", "1"),  # type: ignore
    hashing_enabled=os.getenv("MEERKAT_HASHING", "true"),  # type: ignore
    max_pool_slabs=os.getenv("MEERKAT_MAX_POOL_SLABS", str(HANDLE_SPACE)),  # type: ignore
  )


# The app config is a singleton object.
app_config = CreateConfigFromEnv()
