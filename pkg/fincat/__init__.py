from fincat import (
    category,
    cli,
    construction,
    corpus,
    group,
    homotopy,
    lascar
)
from fincat.config import config


__all__ = [
    "category",
    "cli",
    "config",
    "construction",
    "corpus",
    "group",
    "homotopy",
    "lascar"
]
