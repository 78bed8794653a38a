"""Allow running the CLI as `python -m deltascatter`."""

from .cli import entry

entry()
