from pathlib import Path

from loguru import logger

from src.application.repositories.code_map_repository import CodeMapRepository
from src.entities.models.code_index_map import CodeIndexMap
from src.infrastructure.formats.code_map_format import SUFFIX, read_code_map, write_code_map
from src.infrastructure.repositories.numbered_files import scan_numbered_files


class DirectoryCodeMapRepository(CodeMapRepository):
    """Numbered ``.sdcm`` files in one directory, named after their frame."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self._paths: dict[str, Path] | None = None

    def _index(self) -> dict[str, Path]:
        if self._paths is None:
            self._paths = scan_numbered_files(self.root, (SUFFIX,))
            logger.debug(f"Found {len(self._paths)} code map files in {self.root}")
        return self._paths

    def list_names(self) -> list[str]:
        return list(self._index())

    def get(self, name: str) -> CodeIndexMap:
        return read_code_map(self._index()[name])

    def add(self, name: str, code_map: CodeIndexMap) -> None:
        write_code_map(self.root / f"{name}{SUFFIX}", code_map)
        self._paths = None

    def describe(self, name: str) -> str:
        path = self._index().get(name)
        return str(path) if path is not None else name
