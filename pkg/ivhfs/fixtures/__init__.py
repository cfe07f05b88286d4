"""Bundled workspace fixtures reproducing the worked examples."""
from pathlib import Path
from typing import Tuple

from ivhfs.core.exceptions import UnknownName
from ivhfs.services.workspace_service import Workspace, load_workspace

DATA_DIR = Path(__file__).parent / "data"

FIXTURE_NAMES: Tuple[str, ...] = (
    "example_2_7",
    "example_3_2",
    "prop_3_3",
    "example_3_5",
    "example_3_19_to_3_26",
)


def fixture_path(name: str) -> Path:
    if name not in FIXTURE_NAMES:
        raise UnknownName(f"Unknown fixture: {name}", {"name": name, "known": list(FIXTURE_NAMES)})
    return DATA_DIR / f"{name}.json"


def load_fixture(name: str) -> Workspace:
    return load_workspace(fixture_path(name))
