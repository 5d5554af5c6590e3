"""Access to versioned data files shipped with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path


def data_path(*parts: str) -> Path:
    """Filesystem path of a shipped data file."""
    root = resources.files("wildpulse") / "data"
    return Path(str(root.joinpath(*parts)))


@lru_cache(maxsize=None)
def load_stopwords() -> frozenset[str]:
    text = data_path("stopwords.txt").read_text(encoding="utf-8")
    return frozenset(
        line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )


@lru_cache(maxsize=None)
def load_abbreviations() -> frozenset[str]:
    text = data_path("abbreviations.txt").read_text(encoding="utf-8")
    return frozenset(
        line.strip().lower().rstrip(".")
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )
