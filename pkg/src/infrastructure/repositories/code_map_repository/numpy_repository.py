from pathlib import Path

from src.application.repositories.code_map_repository import CodeMapRepository
from src.entities.exceptions import DataError
from src.entities.models.code_index_map import CodeIndexMap
from src.infrastructure.formats.numpy_import import load_numpy_map
from src.infrastructure.repositories.numbered_files import scan_numbered_files


class NumpyCodeMapRepository(CodeMapRepository):
    """Read-only view of numbered ``.npy`` index arrays produced elsewhere."""

    def __init__(self, root: Path, n_entries: int):
        self.root = Path(root)
        self.n_entries = n_entries
        self._paths: dict[str, Path] | None = None

    def _index(self) -> dict[str, Path]:
        if self._paths is None:
            self._paths = scan_numbered_files(self.root, (".npy",))
        return self._paths

    def list_names(self) -> list[str]:
        return list(self._index())

    def get(self, name: str) -> CodeIndexMap:
        return load_numpy_map(self._index()[name], self.n_entries)

    def add(self, name: str, code_map: CodeIndexMap) -> None:
        raise DataError(f"{self.root} is a read-only numpy map source")

    def describe(self, name: str) -> str:
        path = self._index().get(name)
        return str(path) if path is not None else name
