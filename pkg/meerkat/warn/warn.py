import sys


def warn(message: str) -> None:
  """Prints a user-facing caveat to stderr; the run continues."""
  print(f"\033[93m[warning]\033[0m {message}", file=sys.stderr)
