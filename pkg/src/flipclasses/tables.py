"""
On-disk lookup tables mapping canonical iota strings to increasing-path
counts.

One record per line, "canonical-iota-string<TAB>count", sorted by key.
The table directory defaults to ./tables and can be pointed elsewhere with
the FLIPCLASSES_TABLE_DIR environment variable or per-call paths.
"""

from __future__ import annotations

import os
from pathlib import Path

__all__ = ["table_dir", "ac_table_path", "save_ac_table", "load_ac_table",
           "TableMissingError"]

ENV_TABLE_DIR = "FLIPCLASSES_TABLE_DIR"


class TableMissingError(FileNotFoundError):
    """A required lookup table has not been generated yet."""


def table_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    return Path(os.environ.get(ENV_TABLE_DIR, "tables"))


def ac_table_path(h: int, directory=None) -> Path:
    return table_dir(directory) / f"ac{h}.tsv"


def save_ac_table(mapping: dict, path: os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for key in sorted(mapping):
            fh.write(f"{key}\t{mapping[key]}\n")


def load_ac_table(path: os.PathLike) -> dict:
    path = Path(path)
    if not path.exists():
        raise TableMissingError(
            f"lookup table {path} does not exist; generate it with "
            f"'flipclasses classify' (h=6 needs --heavy)")
    mapping = {}
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            key, value = line.split("\t")
            mapping[key] = int(value)
    return mapping
