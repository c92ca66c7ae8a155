# Paths to the JSON inputs under "test json/".

from pathlib import Path

from core.tools.io_loader import JSONInputFile, load_ideal

FIXTURES = Path(__file__).resolve().parent.parent / "test json"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def fixture_ideal(name: str):
    return load_ideal(JSONInputFile(fixture_path(name)).load())
