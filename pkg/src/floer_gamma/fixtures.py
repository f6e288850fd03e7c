"""Location of the shipped fixture files.

``FLOER_GAMMA_FIXTURES`` (or an explicit directory) overrides the copies
bundled with the package.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

ENV_VAR = "FLOER_GAMMA_FIXTURES"


def fixtures_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    if env := os.environ.get(ENV_VAR):
        return Path(env)
    return Path(str(resources.files("floer_gamma") / "data"))


def read_fixture(name: str, directory: str | os.PathLike | None = None) -> str:
    return (fixtures_dir(directory) / name).read_text(encoding="utf-8")
