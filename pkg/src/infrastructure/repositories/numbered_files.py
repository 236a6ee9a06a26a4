from pathlib import Path

from loguru import logger

from src.entities.exceptions import DataError


def scan_numbered_files(root: Path, suffixes: tuple[str, ...]) -> dict[str, Path]:
    """Map numeric file stems to paths, ordered by the stem's integer value.

    Files whose stem is not a decimal number are skipped with a warning.

    Raises:
        FileNotFoundError: If ``root`` is not a directory.
        DataError: If two files share the same frame number.
    """
    if not root.is_dir():
        raise FileNotFoundError(f"Directory not found: {root}")
    numbered: dict[int, tuple[str, Path]] = {}
    for path in root.iterdir():
        if not path.is_file() or path.suffix.lower() not in suffixes:
            continue
        if not path.stem.isdecimal():
            logger.warning(f"Skipping {path.name}: file stem is not a frame number")
            continue
        number = int(path.stem)
        if number in numbered:
            raise DataError(
                f"Frame number {number} is used by both {numbered[number][1].name} and {path.name}"
            )
        numbered[number] = (path.stem, path)
    return {stem: path for _, (stem, path) in sorted(numbered.items())}


def numeric_order(names: list[str]) -> list[str]:
    return sorted(names, key=int)
