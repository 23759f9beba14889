"""Contains the version string."""

VERSION = "0.1.0"

if __name__ == "__main__":
  print(VERSION)
