"""Bundled problem files: thirteen triangle-group ideals and two braid ideals."""

from importlib import resources
from pathlib import Path


def problem_path(name: str) -> Path:
    """Filesystem path of a bundled problem file, e.g. ``problem_path('g09')``."""
    entry = resources.files(__package__) / f"{name}.prob"
    if not entry.is_file():
        raise FileNotFoundError(f"no bundled problem named {name!r}")
    return Path(str(entry))


def names() -> list[str]:
    base = resources.files(__package__)
    return sorted(entry.name[:-5] for entry in base.iterdir()
                  if entry.name.endswith(".prob"))
