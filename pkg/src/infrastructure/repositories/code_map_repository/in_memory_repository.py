from src.application.repositories.code_map_repository import CodeMapRepository
from src.entities.models.code_index_map import CodeIndexMap
from src.infrastructure.repositories.numbered_files import numeric_order


class InMemoryCodeMapRepository(CodeMapRepository):
    def __init__(self, maps: dict[str, CodeIndexMap] | None = None):
        self._maps: dict[str, CodeIndexMap] = dict(maps or {})

    def list_names(self) -> list[str]:
        return numeric_order(list(self._maps))

    def get(self, name: str) -> CodeIndexMap:
        return self._maps[name]

    def add(self, name: str, code_map: CodeIndexMap) -> None:
        self._maps[name] = code_map

    def clear(self):
        self._maps.clear()
