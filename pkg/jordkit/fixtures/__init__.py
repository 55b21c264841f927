"""JSON fixtures shipped with jordkit."""
from pathlib import Path

FIXTURE_DIR = Path(__file__).parent


def fixture_path(name: str, directory: Path = FIXTURE_DIR) -> Path:
    """
    Raises:
        FileNotFoundError: If the fixture does not exist; the message names
            the path looked up.
    """
    path = Path(directory) / name
    if not path.is_file():
        raise FileNotFoundError(f"Fixture not found: {path}")
    return path
