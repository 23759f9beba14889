from .warn import warn as warn
