"""Resolution of bundled data files, overridable per file or via MORFO_DATA."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path
from typing import Optional

DATA_ENV = "MORFO_DATA"

DICTIONARY = "dictionary.txt"
RULES = "rules.tsv"
DEFAULTS = "defaults.tsv"
PRONOUNS = "pronouns.tsv"
NOMINAL_FLAGS = "nominal_flags.txt"
CONLL_MAPPING = "conll_mapping.tsv"


def data_path(name: str, override: Optional[str] = None) -> Path:
    """Resolve a data file: explicit override > $MORFO_DATA dir > packaged data."""
    if override:
        return Path(override)
    env_dir = os.environ.get(DATA_ENV)
    if env_dir:
        candidate = Path(env_dir) / name
        if candidate.exists():
            return candidate
    return Path(resources.files("morfo").joinpath("data", name))
